#include "wallis/multi_index.hpp"

#include "wallis/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wallis {

std::string to_string(Domain d)
{
    return d == Domain::sphere ? "sphere" : "ball";
}

Domain parse_domain(const std::string& s)
{
    if (s == "sphere") {
        return Domain::sphere;
    }
    if (s == "ball") {
        return Domain::ball;
    }
    throw DomainError("unknown domain '" + s + "' (expected sphere or ball)");
}

RealMultiIndex::RealMultiIndex(std::vector<double> beta) : beta_(std::move(beta))
{
    if (beta_.size() < kMinDimension) {
        throw DomainError("dimension must be >= 3, got " + std::to_string(beta_.size()));
    }
    for (std::size_t k = 0; k < beta_.size(); ++k) {
        if (!std::isfinite(beta_[k]) || !(beta_[k] > -0.5)) {
            throw DomainError("beta_" + std::to_string(k + 1) + " must be > -1/2, got " +
                              std::to_string(beta_[k]));
        }
    }
}

double RealMultiIndex::total() const
{
    std::vector<double> sorted(beta_);
    std::sort(sorted.begin(), sorted.end());
    return std::accumulate(sorted.begin(), sorted.end(), 0.0);
}

IntMultiIndex::IntMultiIndex(std::vector<long> alpha) : alpha_(std::move(alpha))
{
    if (alpha_.size() < kMinDimension) {
        throw DomainError("dimension must be >= 3, got " + std::to_string(alpha_.size()));
    }
    for (std::size_t k = 0; k < alpha_.size(); ++k) {
        if (alpha_[k] < 0) {
            throw DomainError("alpha_" + std::to_string(k + 1) + " must be >= 0");
        }
    }
}

long IntMultiIndex::total() const
{
    return std::accumulate(alpha_.begin(), alpha_.end(), 0L);
}

bool IntMultiIndex::all_even() const
{
    return std::all_of(alpha_.begin(), alpha_.end(), [](long a) { return a % 2 == 0; });
}

bool IntMultiIndex::is_zero() const
{
    return std::all_of(alpha_.begin(), alpha_.end(), [](long a) { return a == 0; });
}

IntMultiIndex IntMultiIndex::scaled(long factor) const
{
    std::vector<long> out(alpha_);
    for (auto& a : out) {
        a *= factor;
    }
    return IntMultiIndex(std::move(out));
}

IntMultiIndex IntMultiIndex::halved() const
{
    if (!all_even()) {
        throw DomainError("halved: multi-index has an odd entry");
    }
    std::vector<long> out(alpha_);
    for (auto& a : out) {
        a /= 2;
    }
    return IntMultiIndex(std::move(out));
}

RealMultiIndex IntMultiIndex::as_real() const
{
    return RealMultiIndex(std::vector<double>(alpha_.begin(), alpha_.end()));
}

} // namespace wallis
