#include "wallis/series_integrals.hpp"

#include "compensated_sum.hpp"
#include "wallis/closed_form.hpp"
#include "wallis/error.hpp"
#include "wallis/specfun.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace wallis {

namespace {

constexpr std::array<SeriesKind, 6> kAllKinds = {
    SeriesKind::t_coth, SeriesKind::t_over_sin, SeriesKind::tan,
    SeriesKind::tan_cubed, SeriesKind::sec, SeriesKind::sec_cubed,
};

Rational raw_coefficient(SeriesKind kind, int k)
{
    switch (kind) {
    case SeriesKind::t_coth:
        return Rational(BigInt(1) << (2 * k)) * bernoulli(2 * k) / Rational(factorial(2 * k));
    case SeriesKind::t_over_sin: {
        if (k == 0) {
            return Rational(1);
        }
        const BigInt num = (BigInt(1) << (2 * k)) - 2; // 2 (2^{2k-1} - 1)
        Rational c = Rational(num) * bernoulli(2 * k) / Rational(factorial(2 * k));
        return k % 2 == 1 ? c : Rational(-c);
    }
    case SeriesKind::tan:
        return tau(2 * k - 1) * bernoulli(2 * k);
    case SeriesKind::tan_cubed:
        return tan_cubed_coefficient(k);
    case SeriesKind::sec: {
        Rational c = euler_number(2 * k) / Rational(factorial(2 * k));
        return k % 2 == 0 ? c : Rational(-c);
    }
    case SeriesKind::sec_cubed:
        return sec_cubed_coefficient(k);
    }
    throw DomainError("unknown series kind");
}

struct CoefficientTable {
    std::vector<Rational> exact;
    std::vector<double> approx;
};

const CoefficientTable& coefficient_table(SeriesKind kind)
{
    static const std::array<CoefficientTable, 6> tables = [] {
        std::array<CoefficientTable, 6> out;
        for (std::size_t i = 0; i < kAllKinds.size(); ++i) {
            const SeriesSpec spec(kAllKinds[i]);
            for (int k = 0; k <= spec.last_index(); ++k) {
                Rational c = k < spec.first_index() ? Rational(0) : raw_coefficient(kAllKinds[i], k);
                out[i].approx.push_back(to_double(c));
                out[i].exact.push_back(std::move(c));
            }
        }
        return out;
    }();
    return tables[static_cast<std::size_t>(kind)];
}

// Sum_{k > last} |c_k| <= F(rho) / rho^{p(last+1)} for any 1 < rho < R.
double coefficient_tail_bound(const SeriesSpec& spec, int last)
{
    const int p = spec.power_of_t(last + 1);
    double best = std::numeric_limits<double>::infinity();
    for (double frac : {0.5, 0.6, 0.7, 0.8, 0.85, 0.9, 0.95, 0.97}) {
        const double rho = frac * spec.radius();
        if (rho <= 1.0) {
            continue;
        }
        const double bound = spec.majorant(rho) * std::exp(-p * std::log(rho));
        best = std::min(best, bound);
    }
    // Slack for rounding in the majorant and the power.
    return best * (1.0 + 1e-10);
}

// Integral of the k-th monomial, given as exponents for the x^{2 gamma} convention.
using TermIntegral = std::function<double(int k)>;

SeriesResult sum_series(const SeriesSpec& spec, const TermIntegral& term_integral, Domain domain,
                        bool normalized, double tol)
{
    if (!(tol > 0.0)) {
        throw DomainError("series tolerance must be > 0");
    }
    detail::CompensatedSum sum;
    double abs_sum = 0.0;
    SeriesResult result;
    result.domain = domain;
    result.normalized = normalized;
    const int last_allowed = std::min(spec.last_index(), spec.first_index() + kSeriesTermCap - 1);
    for (int k = spec.first_index(); k <= last_allowed; ++k) {
        const double term = spec.coefficient_double(k) * term_integral(k);
        sum += term;
        abs_sum += std::fabs(term);
        ++result.terms_used;
        // Monomial integrals never increase with k because |x^alpha| <= 1.
        const double next_integral = term_integral(k + 1);
        const double truncation = next_integral * coefficient_tail_bound(spec, k);
        if (truncation < tol) {
            const double eps = std::numeric_limits<double>::epsilon();
            result.value = sum.value();
            result.remainder_bound = truncation + 4.0 * eps * (result.terms_used + 2) * abs_sum;
            return result;
        }
    }
    throw ConvergenceError("series did not reach tolerance within " +
                           std::to_string(result.terms_used) + " terms");
}

double measure(std::size_t n, Domain domain)
{
    return domain == Domain::sphere ? sphere_area(n).value() : ball_volume(n).value();
}

// Multiplier m_k with the k-th monomial equal to x^{2 m_k gamma}.
long monomial_multiplier(const SeriesSpec& spec, int k)
{
    return spec.odd() ? 2L * k - 1 : static_cast<long>(k);
}

double int_term_integral(const SeriesSpec& spec, const IntMultiIndex& base, Domain domain,
                         bool normalized, int k)
{
    const IntMultiIndex scaled = base.scaled(monomial_multiplier(spec, k));
    const ClosedFormValue v = domain == Domain::sphere ? sphere_integral_int(scaled, normalized)
                                                       : ball_integral_int(scaled, normalized);
    return v.to_double();
}

} // namespace

std::string to_string(SeriesKind kind)
{
    switch (kind) {
    case SeriesKind::t_coth:
        return "coth";
    case SeriesKind::t_over_sin:
        return "sin-recip";
    case SeriesKind::tan:
        return "tan";
    case SeriesKind::tan_cubed:
        return "tan3";
    case SeriesKind::sec:
        return "sec";
    case SeriesKind::sec_cubed:
        return "sec3";
    }
    return "?";
}

SeriesKind parse_series_kind(const std::string& s)
{
    if (s == "coth" || s == "t_coth") {
        return SeriesKind::t_coth;
    }
    if (s == "sin-recip" || s == "t_over_sin") {
        return SeriesKind::t_over_sin;
    }
    if (s == "tan") {
        return SeriesKind::tan;
    }
    if (s == "tan3" || s == "tan_cubed") {
        return SeriesKind::tan_cubed;
    }
    if (s == "sec") {
        return SeriesKind::sec;
    }
    if (s == "sec3" || s == "sec_cubed") {
        return SeriesKind::sec_cubed;
    }
    throw DomainError("unknown series kind '" + s + "'");
}

bool SeriesSpec::odd() const
{
    return kind_ == SeriesKind::tan || kind_ == SeriesKind::tan_cubed;
}

int SeriesSpec::last_index() const
{
    // tan^3 and sec^3 read one index ahead in the number tables.
    const int table_k = kNumberSequenceCap / 2;
    return (kind_ == SeriesKind::tan_cubed || kind_ == SeriesKind::sec_cubed) ? table_k - 1 : table_k;
}

const Rational& SeriesSpec::coefficient(int k) const
{
    if (k < 0 || k > last_index()) {
        throw DomainError("series coefficient index " + std::to_string(k) + " out of range");
    }
    return coefficient_table(kind_).exact[static_cast<std::size_t>(k)];
}

double SeriesSpec::coefficient_double(int k) const
{
    if (k < 0 || k > last_index()) {
        throw DomainError("series coefficient index " + std::to_string(k) + " out of range");
    }
    return coefficient_table(kind_).approx[static_cast<std::size_t>(k)];
}

double SeriesSpec::radius() const
{
    return (kind_ == SeriesKind::t_coth || kind_ == SeriesKind::t_over_sin) ? std::numbers::pi
                                                                             : 0.5 * std::numbers::pi;
}

double SeriesSpec::majorant(double rho) const
{
    switch (kind_) {
    case SeriesKind::t_coth:
        // t cot t = 1 - sum_{k>=1} |c_k| t^{2k}
        return 2.0 - rho / std::tan(rho);
    case SeriesKind::t_over_sin:
        return rho / std::sin(rho);
    case SeriesKind::tan:
        return std::tan(rho);
    case SeriesKind::tan_cubed:
        return std::pow(std::tan(rho), 3);
    case SeriesKind::sec:
        return 1.0 / std::cos(rho);
    case SeriesKind::sec_cubed:
        return std::pow(1.0 / std::cos(rho), 3);
    }
    return std::numeric_limits<double>::infinity();
}

Rational tan_cubed_coefficient(int k)
{
    if (k < 1) {
        throw DomainError("tan_cubed_coefficient: k must be >= 1");
    }
    return Rational(static_cast<long>(k) * (2 * k + 1)) * tau(2 * k + 1) * bernoulli(2 * k + 2) -
           tau(2 * k - 1) * bernoulli(2 * k);
}

Rational sec_cubed_coefficient(int k)
{
    if (k < 0) {
        throw DomainError("sec_cubed_coefficient: k must be >= 0");
    }
    Rational c = (euler_number(2 * k) - euler_number(2 * k + 2)) / Rational(2 * factorial(2 * k));
    return k % 2 == 0 ? c : Rational(-c);
}

SeriesResult series_integral(const SeriesSpec& spec, const IntMultiIndex& alpha, Domain domain,
                             bool normalized, double tol)
{
    if (!(tol > 0.0)) {
        throw DomainError("series tolerance must be > 0");
    }
    if (spec.odd() && !alpha.all_even()) {
        // Every x^{(2k-1) alpha} has an odd exponent and integrates to zero.
        return {0.0, 0, 0.0, domain, normalized};
    }
    const IntMultiIndex base = spec.odd() ? alpha.halved() : alpha;
    return sum_series(
        spec, [&](int k) { return int_term_integral(spec, base, domain, normalized, k); }, domain,
        normalized, tol);
}

SeriesResult series_integral(const SeriesSpec& spec, const RealMultiIndex& beta, Domain domain,
                             bool normalized, double tol)
{
    if (spec.odd()) {
        throw DomainError("real exponents are only supported for the even series kinds");
    }
    for (double b : beta.beta()) {
        if (b < 0.0) {
            throw DomainError("series with real exponents needs every beta_m >= 0");
        }
    }
    const double scale = normalized ? measure(beta.dim(), domain) : 1.0;
    auto term_integral = [&](int k) {
        std::vector<double> scaled(beta.beta().begin(), beta.beta().end());
        for (double& b : scaled) {
            b *= k;
        }
        const RealMultiIndex idx(std::move(scaled));
        const ClosedFormValue v =
            domain == Domain::sphere ? sphere_integral_real(idx) : ball_integral_real(idx);
        return v.to_double() / scale;
    };
    return sum_series(spec, term_integral, domain, normalized, tol);
}

std::vector<double> series_terms(const SeriesSpec& spec, const IntMultiIndex& alpha, Domain domain,
                                 bool normalized, int count)
{
    std::vector<double> out;
    if (spec.odd() && !alpha.all_even()) {
        out.assign(static_cast<std::size_t>(std::max(count, 0)), 0.0);
        return out;
    }
    const IntMultiIndex base = spec.odd() ? alpha.halved() : alpha;
    for (int j = 0; j < count; ++j) {
        const int k = spec.first_index() + j;
        out.push_back(spec.coefficient_double(k) * int_term_integral(spec, base, domain, normalized, k));
    }
    return out;
}

double series_scalar(const SeriesSpec& spec, double t, int max_terms)
{
    detail::CompensatedSum sum;
    const int last = std::min(spec.last_index(), spec.first_index() + max_terms - 1);
    for (int k = spec.first_index(); k <= last; ++k) {
        sum += spec.coefficient_double(k) * std::pow(t, spec.power_of_t(k));
    }
    return sum.value();
}

} // namespace wallis
