#pragma once

#include "wallis/closed_form.hpp"
#include "wallis/multi_index.hpp"

#include <cstddef>
#include <vector>

namespace wallis {

/// Exponents plus the coordinates sent to infinity. The shape of the leading
/// asymptotic depends on which coordinates grow, so the caller names them.
class AsymptoticRequest {
public:
    /// growing holds 0-based coordinate positions. Throws DomainError if it is
    /// empty, out of range, repeats a position, or names a beta_k <= 0.
    AsymptoticRequest(RealMultiIndex idx, std::vector<std::size_t> growing);

    [[nodiscard]] const RealMultiIndex& idx() const { return idx_; }
    [[nodiscard]] const std::vector<std::size_t>& growing() const { return growing_; }
    [[nodiscard]] bool is_growing(std::size_t k) const;

private:
    RealMultiIndex idx_;
    std::vector<std::size_t> growing_;
};

/// Leading Stirling asymptotic of the sphere integral as the growing exponents
/// tend to infinity:
///   2 (2 pi)^{(m-1)/2} e^{sum_fixed beta_k} prod_fixed Gamma(beta_k + 1/2)
///     prod_growing beta_k^{beta_k} / |beta|^{|beta| + (n-1)/2}.
ClosedFormValue sphere_asymptotic(const AsymptoticRequest& req);

/// Ball counterpart: the sphere asymptotic divided by 2|beta|, i.e. leading
/// factor (2 pi)^{(m-1)/2} and exponent (n+1)/2 on |beta|.
ClosedFormValue ball_asymptotic(const AsymptoticRequest& req);

/// Log of the Stirling form of prod_growing Gamma(beta_k + 1/2) / Gamma(|beta| + n/2):
///   (m-1)/2 ln(2 pi) + sum_fixed beta_k + sum_growing beta_k ln beta_k
///     - (|beta| + (n-1)/2) ln |beta|.
double log_gamma_ratio_asymptotic(const AsymptoticRequest& req);

/// The same ratio evaluated directly with log_gamma.
double log_gamma_ratio_exact(const AsymptoticRequest& req);

} // namespace wallis
