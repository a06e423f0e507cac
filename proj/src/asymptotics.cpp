#include "wallis/asymptotics.hpp"

#include "wallis/error.hpp"
#include "wallis/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace wallis {

AsymptoticRequest::AsymptoticRequest(RealMultiIndex idx, std::vector<std::size_t> growing)
    : idx_(std::move(idx)), growing_(std::move(growing))
{
    if (growing_.empty()) {
        throw DomainError("asymptotic request needs at least one growing coordinate");
    }
    std::sort(growing_.begin(), growing_.end());
    if (std::adjacent_find(growing_.begin(), growing_.end()) != growing_.end()) {
        throw DomainError("growing coordinates must be distinct");
    }
    for (std::size_t k : growing_) {
        if (k >= idx_.dim()) {
            throw DomainError("growing coordinate " + std::to_string(k + 1) + " out of range");
        }
        if (!(idx_[k] > 0.0)) {
            throw DomainError("growing beta_" + std::to_string(k + 1) + " must be > 0");
        }
    }
    if (!(idx_.total() > 0.0)) {
        throw DomainError("asymptotic request needs |beta| > 0");
    }
}

bool AsymptoticRequest::is_growing(std::size_t k) const
{
    return std::binary_search(growing_.begin(), growing_.end(), k);
}

double log_gamma_ratio_asymptotic(const AsymptoticRequest& req)
{
    const auto& idx = req.idx();
    const double n = static_cast<double>(idx.dim());
    const double m = static_cast<double>(req.growing().size());
    const double total = idx.total();
    double log_value = 0.5 * (m - 1.0) * std::log(2.0 * std::numbers::pi);
    for (std::size_t k = 0; k < idx.dim(); ++k) {
        if (req.is_growing(k)) {
            log_value += idx[k] * std::log(idx[k]);
        } else {
            log_value += idx[k];
        }
    }
    log_value -= (total + 0.5 * (n - 1.0)) * std::log(total);
    return log_value;
}

double log_gamma_ratio_exact(const AsymptoticRequest& req)
{
    const auto& idx = req.idx();
    const double n = static_cast<double>(idx.dim());
    double log_value = -log_gamma(idx.total() + 0.5 * n);
    for (std::size_t k : req.growing()) {
        log_value += log_gamma(idx[k] + 0.5);
    }
    return log_value;
}

ClosedFormValue sphere_asymptotic(const AsymptoticRequest& req)
{
    const auto& idx = req.idx();
    double log_value = std::numbers::ln2 + log_gamma_ratio_asymptotic(req);
    for (std::size_t k = 0; k < idx.dim(); ++k) {
        if (!req.is_growing(k)) {
            log_value += log_gamma(idx[k] + 0.5);
        }
    }
    return ClosedFormValue::from(LogSigned::from_log(log_value));
}

ClosedFormValue ball_asymptotic(const AsymptoticRequest& req)
{
    const LogSigned sphere = sphere_asymptotic(req).value;
    return ClosedFormValue::from(sphere / LogSigned::from_double(2.0 * req.idx().total()));
}

} // namespace wallis
