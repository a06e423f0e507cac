#include "wallis/closed_form.hpp"

#include "compensated_sum.hpp"
#include "wallis/error.hpp"
#include "wallis/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace wallis {

namespace {

using detail::CompensatedSum;

// ln [prod_{alpha_k != 0} (2 alpha_k - 1)!! / prod_{j<|alpha|} (first + 2j)].
// Numerator and denominator both have |alpha| factors. Pairing the i-th
// smallest of each turns the ratio into a sum of log1p terms of one sign, so
// nothing cancels even when both logs are ~1e7 for |alpha| ~ 1e6. The odd
// factor 2i+1 occurs once for every alpha_k > i.
double log_wallis_ratio(const IntMultiIndex& alpha, double first)
{
    std::vector<long> sorted(alpha.alpha().begin(), alpha.alpha().end());
    std::sort(sorted.begin(), sorted.end());
    CompensatedSum acc;
    double den = first;
    std::size_t exhausted = 0;
    for (long i = 0; exhausted < sorted.size(); ++i) {
        while (exhausted < sorted.size() && sorted[exhausted] <= i) {
            ++exhausted;
        }
        const double num = 2.0 * static_cast<double>(i) + 1.0;
        for (std::size_t c = exhausted; c < sorted.size(); ++c) {
            acc.add(std::log1p((num - den) / den));
            den += 2.0;
        }
    }
    return acc.value();
}

double log_gamma_product(std::span<const double> beta)
{
    std::vector<double> sorted(beta.begin(), beta.end());
    std::sort(sorted.begin(), sorted.end());
    CompensatedSum acc;
    for (double b : sorted) {
        acc.add(log_gamma(b + 0.5));
    }
    return acc.value();
}

Rational wallis_numerator_exact(const IntMultiIndex& alpha)
{
    BigInt num = 1;
    for (long a : alpha.alpha()) {
        if (a != 0) {
            num *= double_factorial_exact(2 * a - 1);
        }
    }
    return Rational(num);
}

} // namespace

LogSigned sphere_area(std::size_t n)
{
    const double half = 0.5 * static_cast<double>(n);
    return LogSigned::from_log(std::numbers::ln2 + half * std::log(std::numbers::pi) -
                               log_gamma(half));
}

LogSigned ball_volume(std::size_t n)
{
    return sphere_area(n) / LogSigned::from_double(static_cast<double>(n));
}

ClosedFormValue sphere_integral_real(const RealMultiIndex& idx)
{
    const double n = static_cast<double>(idx.dim());
    const double log_value =
        std::numbers::ln2 + log_gamma_product(idx.beta()) - log_gamma(idx.total() + 0.5 * n);
    return ClosedFormValue::from(LogSigned::from_log(log_value));
}

ClosedFormValue ball_integral_real(const RealMultiIndex& idx)
{
    const double n = static_cast<double>(idx.dim());
    const double log_value = log_gamma_product(idx.beta()) - log_gamma(idx.total() + 1.0 + 0.5 * n);
    return ClosedFormValue::from(LogSigned::from_log(log_value));
}

namespace {

// Small totals go through the exact rational mean so normalized values are
// correctly rounded.
constexpr long kExactTotalCap = 256;

std::optional<ClosedFormValue> exact_or_scaled(const Rational& mean, LogSigned measure)
{
    const double m = to_double(mean);
    if (!std::isnormal(m)) {
        return std::nullopt;
    }
    const LogSigned v = LogSigned::from_double(m) * measure;
    if (measure == LogSigned::one()) {
        return ClosedFormValue{v, m};
    }
    return ClosedFormValue::from(v);
}

} // namespace

ClosedFormValue sphere_integral_int(const IntMultiIndex& alpha, bool normalized)
{
    const double n = static_cast<double>(alpha.dim());
    const double log_value = log_wallis_ratio(alpha, n);
    if (alpha.total() <= kExactTotalCap) {
        if (auto exact = exact_or_scaled(sphere_mean_exact(alpha),
                                         normalized ? LogSigned::one() : sphere_area(alpha.dim()))) {
            return *exact;
        }
    }
    LogSigned v = LogSigned::from_log(log_value);
    if (!normalized) {
        v *= sphere_area(alpha.dim());
    }
    return ClosedFormValue::from(v);
}

ClosedFormValue ball_integral_int(const IntMultiIndex& alpha, bool normalized)
{
    const double n = static_cast<double>(alpha.dim());
    const double log_value = log_wallis_ratio(alpha, n + 2.0);
    if (alpha.total() <= kExactTotalCap) {
        if (auto exact = exact_or_scaled(ball_mean_exact(alpha),
                                         normalized ? LogSigned::one() : ball_volume(alpha.dim()))) {
            return *exact;
        }
    }
    LogSigned v = LogSigned::from_log(log_value);
    if (!normalized) {
        v *= ball_volume(alpha.dim());
    }
    return ClosedFormValue::from(v);
}

ClosedFormValue monomial_integral_signed(const IntMultiIndex& alpha, Domain domain, bool normalized)
{
    if (!alpha.all_even()) {
        return ClosedFormValue::from(LogSigned::zero());
    }
    const IntMultiIndex half = alpha.halved();
    return domain == Domain::sphere ? sphere_integral_int(half, normalized)
                                    : ball_integral_int(half, normalized);
}

Rational sphere_mean_exact(const IntMultiIndex& alpha)
{
    BigInt den = 1;
    const long n = static_cast<long>(alpha.dim());
    for (long j = 0; j < alpha.total(); ++j) {
        den *= n + 2 * j;
    }
    return wallis_numerator_exact(alpha) / Rational(den);
}

Rational ball_mean_exact(const IntMultiIndex& alpha)
{
    BigInt den = 1;
    const long n = static_cast<long>(alpha.dim());
    for (long j = 1; j <= alpha.total(); ++j) {
        den *= n + 2 * j;
    }
    return wallis_numerator_exact(alpha) / Rational(den);
}

} // namespace wallis
