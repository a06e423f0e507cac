#pragma once

#include "wallis/log_signed.hpp"
#include "wallis/rational.hpp"

namespace wallis {

/// ln Gamma(x) for x > 0, relative error below 1e-13 on [1e-3, 1e6].
///
/// Argument reduction onto [0.5, 2.5) with a fixed-coefficient Taylor series of
/// ln Gamma(2 + z) (coefficients (-1)^k (zeta(k) - 1) / k), and the Stirling
/// series for x >= 10. Throws DomainError for x <= 0 or non-finite x.
double log_gamma(double x);

/// k!! as a LogSigned, with (-1)!! = 0!! = 1. Exact for small k, log space via
/// Gamma(m + 1/2) and Gamma(m + 1) otherwise. Throws DomainError for k < -1.
LogSigned double_factorial(long k);

/// Largest |t| accepted by psi().
inline constexpr double kPsiMaxArgument = 30.0;

/// The Bessel quotient Psi_nu(t) = J_nu(t) / t^nu, from its power series in t^2.
///
/// Terms are generated and summed in double-double arithmetic, so the
/// alternating-series cancellation at |t| = 30 (about 12 digits) still leaves a
/// result accurate to near double precision. Even in t by construction.
/// Throws DomainError for nu < 0 or |t| > kPsiMaxArgument.
double psi(double nu, double t);

/// Largest index accepted by bernoulli() and euler_number().
inline constexpr int kNumberSequenceCap = 128;

/// Exact Bernoulli number B_{two_k} (B_2 = 1/6). two_k must be even, 0..128.
const Rational& bernoulli(int two_k);

/// Exact Euler number E_{two_k} (E_2 = -1, E_4 = 5). two_k must be even, 0..128.
const Rational& euler_number(int two_k);

/// Tangent coefficient tau_{2k-1} with tan t = sum_{k>=1} tau_{2k-1} B_{2k} t^{2k-1}:
/// tau_{2k-1} = (-1)^{k-1} 2^{2k} (2^{2k} - 1) / (2k)!. Input must be odd and >= 1.
Rational tau(int two_k_minus_1);

} // namespace wallis
