#include "wallis/psi_calculus.hpp"

#include "compensated_sum.hpp"
#include "wallis/error.hpp"
#include "wallis/specfun.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <utility>

namespace wallis {

namespace {

std::string render_coefficient(const Rational& c, bool first, bool has_factor)
{
    std::string out;
    const bool negative = c < 0;
    if (first) {
        out = negative ? "-" : "";
    } else {
        out = negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-c) : c;
    if (mag != 1 || !has_factor) {
        out += to_string(mag);
        if (has_factor) {
            out += "*";
        }
    }
    return out;
}

std::string render_psi(unsigned shift)
{
    return shift == 0 ? "Ψ[ν]" : "Ψ[ν+" + std::to_string(shift) + "]";
}

void check_coefficient_index(int k, int lo, const char* what)
{
    if (k < lo || k > static_cast<int>(kMaxDerivativeOrder) / 2) {
        throw DomainError(std::string(what) + ": k must be in [" + std::to_string(lo) + ", 32], got " +
                          std::to_string(k));
    }
}

} // namespace

PsiPoly::PsiPoly(double base_order, std::vector<PsiTerm> terms) : base_order_(base_order)
{
    std::map<std::pair<unsigned, unsigned>, Rational> merged;
    for (auto& t : terms) {
        merged[{t.shift, t.power}] += t.coeff;
    }
    for (auto& [key, coeff] : merged) {
        if (coeff != 0) {
            terms_.push_back({std::move(coeff), key.second, key.first});
        }
    }
}

PsiPoly PsiPoly::base(double nu)
{
    return PsiPoly(nu, {{Rational(1), 0, 0}});
}

Rational PsiPoly::coefficient(unsigned power, unsigned shift) const
{
    for (const auto& t : terms_) {
        if (t.power == power && t.shift == shift) {
            return t.coeff;
        }
    }
    return Rational(0);
}

PsiPoly PsiPoly::derivative() const
{
    std::vector<PsiTerm> out;
    out.reserve(2 * terms_.size());
    for (const auto& t : terms_) {
        if (t.power > 0) {
            out.push_back({t.coeff * t.power, t.power - 1, t.shift});
        }
        out.push_back({-t.coeff, t.power + 1, t.shift + 1});
    }
    return PsiPoly(base_order_, std::move(out));
}

double PsiPoly::evaluate(double t) const
{
    detail::CompensatedSum acc;
    for (const auto& term : terms_) {
        acc += to_double(term.coeff) * std::pow(t, static_cast<double>(term.power)) *
               psi(base_order_ + term.shift, t);
    }
    return acc.value();
}

std::string PsiPoly::render() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        out += render_coefficient(t.coeff, first, true);
        if (t.power == 1) {
            out += "t*";
        } else if (t.power > 1) {
            out += "t^" + std::to_string(t.power) + "*";
        }
        out += render_psi(t.shift);
        first = false;
    }
    return out;
}

PsiPoly derivative_poly(double nu, unsigned k)
{
    if (k > kMaxDerivativeOrder) {
        throw DomainError("derivative_poly: order " + std::to_string(k) + " exceeds cap 64");
    }
    PsiPoly p = PsiPoly::base(nu);
    for (unsigned i = 0; i < k; ++i) {
        p = p.derivative();
    }
    return p;
}

Rational coeff_constant(int k)
{
    check_coefficient_index(k, 1, "coeff_constant");
    const unsigned uk = static_cast<unsigned>(k);
    return derivative_poly(0.0, 2 * uk).coefficient(0, uk);
}

Rational coeff_linear(int k)
{
    check_coefficient_index(k, 1, "coeff_linear");
    const unsigned uk = static_cast<unsigned>(k);
    // One pass past D^{2k}, so k = 32 reaches order 65 without lifting the public cap.
    return derivative_poly(0.0, 2 * uk).derivative().coefficient(1, uk + 1);
}

Rational coeff_t2(int k)
{
    check_coefficient_index(k, 1, "coeff_t2");
    const unsigned uk = static_cast<unsigned>(k);
    return derivative_poly(0.0, 2 * uk).coefficient(2, uk + 1);
}

Rational coeff_t4(int k)
{
    check_coefficient_index(k, 2, "coeff_t4");
    const unsigned uk = static_cast<unsigned>(k);
    return derivative_poly(0.0, 2 * uk).coefficient(4, uk + 2);
}

PsiField::PsiField(double base_order, std::size_t dim, std::vector<FieldTerm> terms, unsigned order)
    : base_order_(base_order), dim_(dim), order_(order)
{
    std::map<std::pair<unsigned, std::vector<unsigned>>, Rational> merged;
    for (auto& t : terms) {
        if (t.monomial.size() != dim_) {
            throw DomainError("PsiField: monomial has wrong dimension");
        }
        merged[{t.shift, std::move(t.monomial)}] += t.coeff;
    }
    for (auto& [key, coeff] : merged) {
        if (coeff != 0) {
            terms_.push_back({std::move(coeff), key.second, key.first});
        }
    }
}

PsiField PsiField::radial(double nu, std::size_t dim)
{
    return PsiField(nu, dim, {{Rational(1), std::vector<unsigned>(dim, 0u), 0}});
}

std::string PsiField::render() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string factors;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (t.monomial[i] == 0) {
                continue;
            }
            factors += "ξ" + std::to_string(i + 1);
            if (t.monomial[i] > 1) {
                factors += "^" + std::to_string(t.monomial[i]);
            }
            factors += "*";
        }
        out += render_coefficient(t.coeff, first, true);
        out += factors + render_psi(t.shift);
        first = false;
    }
    return out;
}

PsiField partial_derivative_field(const PsiField& field, std::size_t j)
{
    if (j >= field.dim()) {
        throw DomainError("partial_derivative_field: coordinate " + std::to_string(j + 1) +
                          " out of range for dimension " + std::to_string(field.dim()));
    }
    if (field.order() >= kMaxDerivativeOrder) {
        throw DomainError("partial_derivative_field: derivative order would exceed cap 64");
    }
    std::vector<FieldTerm> out;
    out.reserve(2 * field.terms().size());
    for (const auto& t : field.terms()) {
        if (t.monomial[j] > 0) {
            FieldTerm lowered{t.coeff * t.monomial[j], t.monomial, t.shift};
            --lowered.monomial[j];
            out.push_back(std::move(lowered));
        }
        FieldTerm raised{-t.coeff, t.monomial, t.shift + 1};
        ++raised.monomial[j];
        out.push_back(std::move(raised));
    }
    return PsiField(field.base_order(), field.dim(), std::move(out), field.order() + 1);
}

double evaluate_field(const PsiField& field, std::span<const double> xi)
{
    if (xi.size() != field.dim()) {
        throw DomainError("evaluate_field: point has wrong dimension");
    }
    double r2 = 0.0;
    for (double x : xi) {
        r2 += x * x;
    }
    const double r = std::sqrt(r2);
    std::map<unsigned, double> psi_values;
    detail::CompensatedSum acc;
    for (const auto& t : field.terms()) {
        auto it = psi_values.find(t.shift);
        if (it == psi_values.end()) {
            it = psi_values.emplace(t.shift, psi(field.base_order() + t.shift, r)).first;
        }
        double mono = 1.0;
        for (std::size_t i = 0; i < xi.size(); ++i) {
            for (unsigned p = 0; p < t.monomial[i]; ++p) {
                mono *= xi[i];
            }
        }
        acc += to_double(t.coeff) * mono * it->second;
    }
    return acc.value();
}

} // namespace wallis
