#pragma once

#include "wallis/log_signed.hpp"
#include "wallis/multi_index.hpp"
#include "wallis/rational.hpp"

#include <optional>

namespace wallis {

/// A closed-form integral kept in log space, plus its double value when that
/// is representable.
struct ClosedFormValue {
    LogSigned value;
    std::optional<double> also_float;

    static ClosedFormValue from(LogSigned v) { return {v, v.representable()}; }
    /// also_float, or exp of the log magnitude (possibly inf / 0) otherwise.
    [[nodiscard]] double to_double() const { return also_float ? *also_float : value.value(); }
};

/// Surface area omega_n = 2 pi^{n/2} / Gamma(n/2) of the unit sphere in R^n.
LogSigned sphere_area(std::size_t n);
/// Volume v_n = omega_n / n of the unit ball in R^n.
LogSigned ball_volume(std::size_t n);

/// Integral of x^{2 beta} over the unit sphere:
/// 2 prod_k Gamma(beta_k + 1/2) / Gamma(|beta| + n/2).
ClosedFormValue sphere_integral_real(const RealMultiIndex& idx);

/// Integral of x^{2 beta} over the unit ball:
/// prod_k Gamma(beta_k + 1/2) / Gamma(|beta| + 1 + n/2).
ClosedFormValue ball_integral_real(const RealMultiIndex& idx);

/// Integral of x^{2 alpha} over the unit sphere from the n-dimensional Wallis
/// product prod_{alpha_k != 0} (2 alpha_k - 1)!! / ((n + 2|alpha| - 2) ... (n + 2) n),
/// times omega_n unless normalized. The descending product is accumulated in
/// log space, so |alpha| in the millions is fine.
ClosedFormValue sphere_integral_int(const IntMultiIndex& alpha, bool normalized);

/// Ball counterpart of sphere_integral_int: denominator (n + 2|alpha|) ... (n + 2),
/// normalization v_n.
ClosedFormValue ball_integral_int(const IntMultiIndex& alpha, bool normalized);

/// Integral of the signed monomial x^alpha (alpha not pre-doubled). Exactly zero
/// when some alpha_j is odd; otherwise the Wallis value for alpha / 2.
ClosedFormValue monomial_integral_signed(const IntMultiIndex& alpha, Domain domain,
                                         bool normalized = false);

/// Exact mean of x^{2 alpha} over the sphere (the normalized Wallis ratio).
Rational sphere_mean_exact(const IntMultiIndex& alpha);
/// Exact mean of x^{2 alpha} over the ball.
Rational ball_mean_exact(const IntMultiIndex& alpha);

} // namespace wallis
