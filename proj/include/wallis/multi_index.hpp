#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace wallis {

/// Smallest dimension handled anywhere in the library.
inline constexpr std::size_t kMinDimension = 3;

enum class Domain { sphere, ball };

std::string to_string(Domain d);
Domain parse_domain(const std::string& s);

/// Real exponents beta_k > -1/2 of the monomial x^{2 beta} = prod |x_k|^{2 beta_k}.
class RealMultiIndex {
public:
    /// Throws DomainError if dim < 3, or some beta_k is not finite or <= -1/2.
    explicit RealMultiIndex(std::vector<double> beta);

    [[nodiscard]] std::size_t dim() const { return beta_.size(); }
    [[nodiscard]] std::span<const double> beta() const { return beta_; }
    [[nodiscard]] double operator[](std::size_t k) const { return beta_[k]; }
    /// |beta|, summed in sorted order so permutations give identical bits.
    [[nodiscard]] double total() const;

private:
    std::vector<double> beta_;
};

/// Nonnegative integer exponents alpha of a monomial.
class IntMultiIndex {
public:
    /// Throws DomainError if dim < 3 or some entry is negative.
    explicit IntMultiIndex(std::vector<long> alpha);

    [[nodiscard]] std::size_t dim() const { return alpha_.size(); }
    [[nodiscard]] std::span<const long> alpha() const { return alpha_; }
    [[nodiscard]] long operator[](std::size_t k) const { return alpha_[k]; }
    [[nodiscard]] long total() const;
    [[nodiscard]] bool all_even() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] IntMultiIndex scaled(long factor) const;
    /// Componentwise alpha / 2; requires all_even().
    [[nodiscard]] IntMultiIndex halved() const;
    [[nodiscard]] RealMultiIndex as_real() const;

    friend bool operator==(const IntMultiIndex&, const IntMultiIndex&) = default;
    friend auto operator<=>(const IntMultiIndex&, const IntMultiIndex&) = default;

private:
    std::vector<long> alpha_;
};

} // namespace wallis
