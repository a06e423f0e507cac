#pragma once

#include "wallis/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace wallis {

/// Largest derivative order the symbolic layer will build.
inline constexpr unsigned kMaxDerivativeOrder = 64;

/// coeff * t^power * Psi_{nu + shift}(t)
struct PsiTerm {
    Rational coeff;
    unsigned power = 0;
    unsigned shift = 0;

    friend bool operator==(const PsiTerm&, const PsiTerm&) = default;
};

/// Exact symbolic sum of PsiTerms over a fixed base order nu. Terms are kept
/// sorted by (shift, power), merged, and free of zero coefficients.
class PsiPoly {
public:
    PsiPoly(double base_order, std::vector<PsiTerm> terms);

    /// The single term Psi_nu(t).
    static PsiPoly base(double nu);

    [[nodiscard]] double base_order() const { return base_order_; }
    [[nodiscard]] const std::vector<PsiTerm>& terms() const { return terms_; }
    /// Coefficient of t^power Psi_{nu+shift}, zero when absent.
    [[nodiscard]] Rational coefficient(unsigned power, unsigned shift) const;

    /// One exact rewriting pass,
    /// d/dt [t^p Psi_{nu+j}] = p t^{p-1} Psi_{nu+j} - t^{p+1} Psi_{nu+j+1}.
    [[nodiscard]] PsiPoly derivative() const;

    /// Numeric value at t (|t| <= 30).
    [[nodiscard]] double evaluate(double t) const;

    /// Canonical text, e.g. "3*Ψ[ν+2] - 6*t^2*Ψ[ν+3] + t^4*Ψ[ν+4]".
    [[nodiscard]] std::string render() const;

    friend bool operator==(const PsiPoly&, const PsiPoly&) = default;

private:
    double base_order_;
    std::vector<PsiTerm> terms_;
};

/// D^k Psi_nu as a PsiPoly, built by k rewriting passes. Throws DomainError for k > 64.
PsiPoly derivative_poly(double nu, unsigned k);

/// Constant coefficient of D^{2k} Psi_nu (the t^0 Psi_{nu+k} term); equals (-1)^k (2k-1)!!.
/// 1 <= k <= 32.
Rational coeff_constant(int k);
/// Coefficient of t Psi_{nu+k+1} in D^{2k+1} Psi_nu; equals (-1)^{k+1} (2k+1)!!. 1 <= k <= 32.
Rational coeff_linear(int k);
/// Coefficient of t^2 Psi_{nu+k+1} in D^{2k} Psi_nu; magnitude k (2k-1)!!. 1 <= k <= 32.
Rational coeff_t2(int k);
/// Coefficient of t^4 Psi_{nu+k+2} in D^{2k} Psi_nu; magnitude k (k-1) (2k-1)!! / 6. 2 <= k <= 32.
Rational coeff_t4(int k);

/// coeff * xi^monomial * Psi_{nu + shift}(|xi|)
struct FieldTerm {
    Rational coeff;
    std::vector<unsigned> monomial;
    unsigned shift = 0;

    friend bool operator==(const FieldTerm&, const FieldTerm&) = default;
};

/// Multivariate analogue of PsiPoly: sums of FieldTerms in dim variables.
class PsiField {
public:
    /// Canonicalizes terms; every monomial must have dim entries.
    PsiField(double base_order, std::size_t dim, std::vector<FieldTerm> terms, unsigned order = 0);

    /// The radial function Psi_nu(|xi|) on R^dim.
    static PsiField radial(double nu, std::size_t dim);

    [[nodiscard]] double base_order() const { return base_order_; }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    /// Total number of partial derivatives applied since radial().
    [[nodiscard]] unsigned order() const { return order_; }
    [[nodiscard]] const std::vector<FieldTerm>& terms() const { return terms_; }

    [[nodiscard]] std::string render() const;

    friend bool operator==(const PsiField&, const PsiField&) = default;

private:
    double base_order_;
    std::size_t dim_;
    std::vector<FieldTerm> terms_;
    unsigned order_;
};

/// d/dxi_j of a field (j is 0-based), using
/// d/dxi_j [xi^g Psi_{nu+s}] = g_j xi^{g-e_j} Psi_{nu+s} - xi^{g+e_j} Psi_{nu+s+1}.
/// Throws DomainError for j >= dim or when the order would exceed 64.
PsiField partial_derivative_field(const PsiField& field, std::size_t j);

/// Numeric value of the field at xi (|xi| <= 30), compensated summation.
double evaluate_field(const PsiField& field, std::span<const double> xi);

} // namespace wallis
