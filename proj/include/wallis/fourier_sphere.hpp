#pragma once

#include "wallis/log_signed.hpp"
#include "wallis/multi_index.hpp"
#include "wallis/psi_calculus.hpp"
#include "wallis/rational.hpp"

#include <complex>
#include <memory>
#include <span>
#include <string>

namespace wallis {

/// alpha = alpha_even + alpha_odd, where alpha_odd keeps the odd entries and
/// mu_odd counts them.
struct ParityDecomposition {
    IntMultiIndex alpha;
    IntMultiIndex alpha_odd;
    IntMultiIndex alpha_even;
    int mu_odd = 0;

    static ParityDecomposition of(const IntMultiIndex& alpha);
};

/// Structured leading behaviour of the transform near the origin:
///   (2 pi)^{n/2} * core * i^{imaginary_power} * xi^{xi_monomial} * Psi_{psi_order}(|xi|)
/// with core = (-1)^mu prod_{alpha^e_m != 0} (alpha^e_m - 1)!! prod_{alpha^o_m != 0} alpha^o_m!!.
/// Each odd coordinate contributes a factor (-i xi_m) for the e^{-i x.xi} kernel;
/// the (-1)^mu part of that lives in core so imaginary_power stays equal to mu.
struct LeadingTerm {
    std::size_t dim = 0;
    BigInt core;
    LogSigned scalar_part;
    int imaginary_power = 0;
    IntMultiIndex xi_monomial;
    double psi_order = 0.0;

    [[nodiscard]] std::complex<double> evaluate(std::span<const double> xi) const;
    /// e.g. "(2π)^(3/2) * 3!! * (-iξ1) * Ψ[5/2](ξ)"
    [[nodiscard]] std::string render() const;

    // Kept for rendering the double-factorial factors.
    ParityDecomposition parts;
};

/// d^alpha applied to Psi_{(n-2)/2}(|xi|), built once per (n, alpha) and cached.
std::shared_ptr<const PsiField> transform_field(const IntMultiIndex& alpha);

/// Fourier transform of x^alpha dsigma on the unit sphere,
///   int x^alpha e^{-i x.xi} dsigma(x) = i^{|alpha|} d^alpha [(2 pi)^{n/2} Psi_{(n-2)/2}(|xi|)].
/// Real when mu(alpha^o) is even, purely imaginary otherwise. Requires |alpha| <= 64
/// and |xi| <= 30.
std::complex<double> transform_exact(const IntMultiIndex& alpha, std::span<const double> xi);

LeadingTerm leading_term(const IntMultiIndex& alpha);

/// Value of the transform at xi = 0: zero if some alpha_m is odd, otherwise
/// (2 pi)^{n/2} 2^{-(n+|alpha|-2)/2} prod (alpha_m - 1)!! / Gamma((n + |alpha|)/2).
double transform_at_zero(const IntMultiIndex& alpha);

} // namespace wallis
