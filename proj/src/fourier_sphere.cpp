#include "wallis/fourier_sphere.hpp"

#include "wallis/error.hpp"
#include "wallis/specfun.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

namespace wallis {

namespace {

std::complex<double> times_i_power(double v, int power)
{
    switch (((power % 4) + 4) % 4) {
    case 0:
        return {v, 0.0};
    case 1:
        return {0.0, v};
    case 2:
        return {-v, 0.0};
    default:
        return {0.0, -v};
    }
}

double log_two_pi_half_n(std::size_t n)
{
    return 0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi);
}

std::string half_integer(long twice)
{
    if (twice % 2 == 0) {
        return std::to_string(twice / 2);
    }
    return std::to_string(twice) + "/2";
}

} // namespace

ParityDecomposition ParityDecomposition::of(const IntMultiIndex& alpha)
{
    std::vector<long> odd(alpha.dim(), 0);
    std::vector<long> even(alpha.dim(), 0);
    int mu = 0;
    for (std::size_t m = 0; m < alpha.dim(); ++m) {
        if (alpha[m] % 2 == 1) {
            odd[m] = alpha[m];
            ++mu;
        }
        even[m] = alpha[m] - odd[m];
    }
    return {alpha, IntMultiIndex(std::move(odd)), IntMultiIndex(std::move(even)), mu};
}

std::shared_ptr<const PsiField> transform_field(const IntMultiIndex& alpha)
{
    if (alpha.total() > static_cast<long>(kMaxDerivativeOrder)) {
        throw DomainError("transform: |alpha| exceeds derivative cap 64");
    }
    static std::mutex mutex;
    static std::map<std::vector<long>, std::shared_ptr<const PsiField>> cache;
    const std::vector<long> key(alpha.alpha().begin(), alpha.alpha().end());
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }
    const double nu = 0.5 * (static_cast<double>(alpha.dim()) - 2.0);
    PsiField field = PsiField::radial(nu, alpha.dim());
    for (std::size_t j = 0; j < alpha.dim(); ++j) {
        for (long r = 0; r < alpha[j]; ++r) {
            field = partial_derivative_field(field, j);
        }
    }
    auto shared = std::make_shared<const PsiField>(std::move(field));
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(shared)).first->second;
}

std::complex<double> transform_exact(const IntMultiIndex& alpha, std::span<const double> xi)
{
    if (xi.size() != alpha.dim()) {
        throw DomainError("transform_exact: xi has dimension " + std::to_string(xi.size()) +
                          ", expected " + std::to_string(alpha.dim()));
    }
    const auto field = transform_field(alpha);
    const double v = std::exp(log_two_pi_half_n(alpha.dim())) * evaluate_field(*field, xi);
    return times_i_power(v, static_cast<int>(alpha.total() % 4));
}

LeadingTerm leading_term(const IntMultiIndex& alpha)
{
    ParityDecomposition parts = ParityDecomposition::of(alpha);
    BigInt core = 1;
    std::vector<long> xi_mono(alpha.dim(), 0);
    for (std::size_t m = 0; m < alpha.dim(); ++m) {
        if (parts.alpha_even[m] != 0) {
            core *= double_factorial_exact(parts.alpha_even[m] - 1);
        }
        if (parts.alpha_odd[m] != 0) {
            core *= double_factorial_exact(parts.alpha_odd[m]);
            xi_mono[m] = 1;
        }
    }
    if (parts.mu_odd % 2 == 1) {
        core = -core;
    }
    const long n = static_cast<long>(alpha.dim());
    const long twice_order = n + alpha.total() + parts.mu_odd - 2;
    const LogSigned core_log =
        LogSigned(core < 0 ? -1 : 1, std::log(to_double(Rational(core < 0 ? BigInt(-core) : core))));
    LeadingTerm lt{
        alpha.dim(),
        core,
        core_log * LogSigned::from_log(log_two_pi_half_n(alpha.dim())),
        parts.mu_odd,
        IntMultiIndex(std::move(xi_mono)),
        0.5 * static_cast<double>(twice_order),
        std::move(parts),
    };
    return lt;
}

std::complex<double> LeadingTerm::evaluate(std::span<const double> xi) const
{
    if (xi.size() != dim) {
        throw DomainError("LeadingTerm::evaluate: xi has wrong dimension");
    }
    double r2 = 0.0;
    double mono = 1.0;
    for (std::size_t m = 0; m < dim; ++m) {
        r2 += xi[m] * xi[m];
        if (xi_monomial[m] != 0) {
            mono *= xi[m];
        }
    }
    const double v = scalar_part.value() * mono * psi(psi_order, std::sqrt(r2));
    return times_i_power(v, imaginary_power);
}

std::string LeadingTerm::render() const
{
    std::string out = "(2π)^(" + half_integer(static_cast<long>(dim)) + ")";
    for (std::size_t m = 0; m < dim; ++m) {
        const long e = parts.alpha_even[m];
        if (e >= 4) {
            out += " * " + std::to_string(e - 1) + "!!";
        }
    }
    for (std::size_t m = 0; m < dim; ++m) {
        const long o = parts.alpha_odd[m];
        if (o >= 3) {
            out += " * " + std::to_string(o) + "!!";
        }
    }
    for (std::size_t m = 0; m < dim; ++m) {
        if (parts.alpha_odd[m] != 0) {
            out += " * (-iξ" + std::to_string(m + 1) + ")";
        }
    }
    out += " * Ψ[" + half_integer(static_cast<long>(std::lround(2.0 * psi_order))) + "](ξ)";
    return out;
}

double transform_at_zero(const IntMultiIndex& alpha)
{
    if (!alpha.all_even()) {
        return 0.0;
    }
    const double n = static_cast<double>(alpha.dim());
    const double total = static_cast<double>(alpha.total());
    double log_value = log_two_pi_half_n(alpha.dim()) - 0.5 * (n + total - 2.0) * std::numbers::ln2 -
                       log_gamma(0.5 * (n + total));
    for (long a : alpha.alpha()) {
        if (a != 0) {
            log_value += double_factorial(a - 1).log_mag();
        }
    }
    return std::exp(log_value);
}

} // namespace wallis
