#include <doctest.h>

#include "wallis/closed_form.hpp"
#include "wallis/error.hpp"
#include "wallis/multi_index.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

using namespace wallis;
using std::numbers::pi;

namespace {

double rel(double a, double b)
{
    return std::fabs(a - b) / std::fabs(b);
}

// Independent Gamma-function route through the C library.
double sphere_by_tgamma(const std::vector<double>& beta)
{
    double num = 2.0;
    double total = 0.0;
    for (double b : beta) {
        num *= std::tgamma(b + 0.5);
        total += b;
    }
    return num / std::tgamma(total + beta.size() / 2.0);
}

} // namespace

TEST_CASE("sphere area and ball volume")
{
    for (std::size_t n = 3; n <= 12; ++n) {
        CAPTURE(n);
        const double omega = 2.0 * std::pow(pi, n / 2.0) / std::tgamma(n / 2.0);
        CHECK(rel(sphere_area(n).value(), omega) < 1e-14);
        CHECK(rel(ball_volume(n).value(), omega / n) < 1e-14);
    }
    CHECK(rel(sphere_area(3).value(), 4.0 * pi) < 1e-15);
    CHECK(rel(ball_volume(3).value(), 4.0 * pi / 3.0) < 1e-15);
}

TEST_CASE("integer spot values")
{
    const IntMultiIndex ones({1, 1, 1});
    CHECK(rel(sphere_integral_int(ones, false).to_double(), 4.0 * pi / 105.0) < 1e-15);
    CHECK(sphere_integral_int(ones, true).to_double() == 1.0 / 105.0);
    CHECK(sphere_mean_exact(ones) == Rational(1, 105));
    CHECK(ball_mean_exact(ones) == Rational(1, 315));
    CHECK(rel(ball_integral_int(ones, false).to_double(), 4.0 * pi / 945.0) < 1e-15);
}

TEST_CASE("mean of x_k^2 is 1/n exactly")
{
    for (std::size_t n = 3; n <= 12; ++n) {
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<long> a(n, 0);
            a[k] = 1;
            CHECK(sphere_mean_exact(IntMultiIndex(a)) == Rational(1, static_cast<long>(n)));
            CHECK(ball_mean_exact(IntMultiIndex(a)) == Rational(1, static_cast<long>(n + 2)));
        }
    }
}

TEST_CASE("integer and real paths agree")
{
    for (std::size_t n = 3; n <= 5; ++n) {
        for (long a0 = 0; a0 <= 4; ++a0) {
            for (long a1 = 0; a1 <= 3; ++a1) {
                std::vector<long> a(n, 0);
                a[0] = a0;
                a[n - 1] = a1;
                const IntMultiIndex alpha(a);
                CAPTURE(n);
                CAPTURE(a0);
                CAPTURE(a1);
                CHECK(rel(sphere_integral_int(alpha, false).to_double(),
                          sphere_integral_real(alpha.as_real()).to_double()) < 1e-13);
                CHECK(rel(ball_integral_int(alpha, false).to_double(),
                          ball_integral_real(alpha.as_real()).to_double()) < 1e-13);
            }
        }
    }
}

TEST_CASE("real exponents against the C library Gamma function")
{
    const std::vector<std::vector<double>> cases = {
        {-0.25, -0.25, -0.25}, {0.5, 1.5, 0.0, 0.25, 0.0}, {-0.2, 0.0, 0.0}, {3.7, 0.1, 2.2, 0.0},
        {-0.49, 1.0, 1.0}};
    for (const auto& beta : cases) {
        const RealMultiIndex idx(beta);
        const double s = sphere_by_tgamma(beta);
        double total = 0.0;
        for (double b : beta) {
            total += b;
        }
        CHECK(rel(sphere_integral_real(idx).to_double(), s) < 1e-13);
        // ball = sphere / (2|beta| + n)
        CHECK(rel(ball_integral_real(idx).to_double(), s / (2.0 * total + beta.size())) < 1e-13);
    }
    CHECK(rel(sphere_integral_real(RealMultiIndex({-0.25, -0.25, -0.25})).to_double(),
              77.7838482214365842658) < 1e-14);
}

TEST_CASE("permutation invariance is bit exact")
{
    std::vector<double> beta = {0.3, 2.75, 0.0, 11.125, 1.5};
    const double base = sphere_integral_real(RealMultiIndex(beta)).to_double();
    std::sort(beta.begin(), beta.end());
    do {
        CHECK(sphere_integral_real(RealMultiIndex(beta)).to_double() == base);
    } while (std::next_permutation(beta.begin(), beta.end()));
}

TEST_CASE("signed monomials vanish with an odd exponent")
{
    CHECK(monomial_integral_signed(IntMultiIndex({1, 0, 0}), Domain::sphere).value.is_zero());
    CHECK(monomial_integral_signed(IntMultiIndex({2, 3, 2}), Domain::ball).value.is_zero());
    const auto even = monomial_integral_signed(IntMultiIndex({2, 2, 2}), Domain::sphere, true);
    CHECK(even.to_double() == 1.0 / 105.0);
}

TEST_CASE("huge exponents stay finite in log space")
{
    const IntMultiIndex alpha({1000000, 0, 0});
    const auto v = sphere_integral_int(alpha, false);
    CHECK_FALSE(v.value.is_zero());
    // 2 Gamma(a + 1/2) Gamma(1/2)^2 / Gamma(a + 3/2) = 2 pi / (a + 1/2)
    CHECK(rel(v.to_double(), 2.0 * pi / (1000000.5)) < 1e-12);
    const auto tiny = sphere_integral_real(RealMultiIndex({400.0, 400.0, 400.0, 400.0}));
    CHECK_FALSE(tiny.also_float.has_value());
    CHECK(tiny.value.sign() == 1);
    CHECK(std::isfinite(tiny.value.log_mag()));
    CHECK(tiny.value.log_mag() < -700.0);
}

TEST_CASE("domain violations")
{
    CHECK_THROWS_AS(RealMultiIndex({-0.5, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(RealMultiIndex({-0.6, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(RealMultiIndex({1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(IntMultiIndex({1, -1, 0}), DomainError);
    CHECK_THROWS_AS(IntMultiIndex({1, 1}), DomainError);
    CHECK(sphere_area(2).value() == doctest::Approx(2.0 * pi).epsilon(1e-15));
}
