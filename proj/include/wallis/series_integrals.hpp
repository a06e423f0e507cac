#pragma once

#include "wallis/multi_index.hpp"
#include "wallis/rational.hpp"

#include <string>
#include <vector>

namespace wallis {

/// The power series handled termwise:
///   t_coth      t coth t    = sum_{k>=0} 2^{2k} B_{2k} / (2k)! t^{2k}
///   t_over_sin  t / sin t   = 1 + 2 sum_{k>=1} (-1)^{k-1} (2^{2k-1} - 1) B_{2k} / (2k)! t^{2k}
///   tan         tan t       = sum_{k>=1} tau_{2k-1} B_{2k} t^{2k-1}
///   tan_cubed   tan^3 t     = sum_{k>=1} (k (2k+1) tau_{2k+1} B_{2k+2} - tau_{2k-1} B_{2k}) t^{2k-1}
///   sec         sec t       = sum_{k>=0} (-1)^k E_{2k} / (2k)! t^{2k}
///   sec_cubed   sec^3 t     = 1/2 sum_{k>=0} (-1)^k (E_{2k} - E_{2k+2}) / (2k)! t^{2k}
enum class SeriesKind { t_coth, t_over_sin, tan, tan_cubed, sec, sec_cubed };

std::string to_string(SeriesKind kind);
/// Accepts the CLI spellings coth, sin-recip, tan, tan3, sec, sec3 and the enum names.
SeriesKind parse_series_kind(const std::string& s);

class SeriesSpec {
public:
    explicit SeriesSpec(SeriesKind kind) : kind_(kind) {}

    [[nodiscard]] SeriesKind kind() const { return kind_; }
    /// Odd power series (tan family).
    [[nodiscard]] bool odd() const;
    [[nodiscard]] int first_index() const { return odd() ? 1 : 0; }
    /// Last index whose coefficient the Bernoulli/Euler tables can supply.
    [[nodiscard]] int last_index() const;
    /// Exact coefficient of t^{power_of_t(k)}.
    [[nodiscard]] const Rational& coefficient(int k) const;
    [[nodiscard]] double coefficient_double(int k) const;
    /// 2k for even kinds, 2k - 1 for the tan family.
    [[nodiscard]] int power_of_t(int k) const { return odd() ? 2 * k - 1 : 2 * k; }
    /// Radius of convergence: pi for t_coth and t_over_sin, pi/2 otherwise.
    [[nodiscard]] double radius() const;
    /// sum_k |coefficient(k)| rho^{power_of_t(k)}, in closed form, for 0 < rho < radius.
    [[nodiscard]] double majorant(double rho) const;

private:
    SeriesKind kind_;
};

Rational tan_cubed_coefficient(int k);
Rational sec_cubed_coefficient(int k);

/// Most terms any series_integral call will sum.
inline constexpr int kSeriesTermCap = 64;

struct SeriesResult {
    double value = 0.0;
    int terms_used = 0;
    /// Rigorous bound on |exact - value|: truncation tail plus floating rounding.
    double remainder_bound = 0.0;
    Domain domain = Domain::sphere;
    bool normalized = false;
};

/// Integral of f(x^alpha) over the unit sphere or ball, f one of the series
/// kinds, by termwise integration with the Wallis formulas. Term k integrates
/// x^{power_of_t(k) alpha}; for the tan family every term vanishes unless all
/// alpha_m are even, in which case alpha = 2 alpha'. Stops once the certified
/// truncation tail drops below tol; remainder_bound adds a rounding allowance on top. Throws DomainError for tol <= 0 and
/// ConvergenceError if the cap is reached first.
SeriesResult series_integral(const SeriesSpec& spec, const IntMultiIndex& alpha, Domain domain,
                             bool normalized, double tol);

/// Real-exponent variant, f(x^beta) with x^beta = prod |x_m|^{beta_m}. Only the
/// even kinds are accepted, and every beta_m must be >= 0 (so |x^beta| <= 1 and
/// every term stays integrable).
SeriesResult series_integral(const SeriesSpec& spec, const RealMultiIndex& beta, Domain domain,
                             bool normalized, double tol);

/// Individual integrated terms k = first_index() ... first_index() + count - 1.
std::vector<double> series_terms(const SeriesSpec& spec, const IntMultiIndex& alpha, Domain domain,
                                 bool normalized, int count);

/// The scalar partial sum sum_{j < max_terms} coefficient(k_j) t^{power_of_t(k_j)}.
double series_scalar(const SeriesSpec& spec, double t, int max_terms);

} // namespace wallis
