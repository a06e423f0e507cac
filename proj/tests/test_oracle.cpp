#include <doctest.h>

#include "wallis/closed_form.hpp"
#include "wallis/error.hpp"
#include "wallis/oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace wallis;

namespace {

double norm2(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x) {
        s += v * v;
    }
    return s;
}

} // namespace

TEST_CASE("constant integrands give the measure with zero error")
{
    const auto s = mc_sphere(Integrand([](std::span<const double>) { return 1.0; }), 5, SeededRun{1, 2}, 1000);
    CHECK(s.value == doctest::Approx(sphere_area(5).value()).epsilon(1e-14));
    CHECK(s.std_error == 0.0);
    CHECK(s.samples == 1000);
    const auto b = mc_ball(Integrand([](std::span<const double>) { return 1.0; }), 4, SeededRun{1, 3}, 999);
    CHECK(b.value == doctest::Approx(ball_volume(4).value()).epsilon(1e-14));
    CHECK(b.method == OracleMethod::mc_ball);
}

TEST_CASE("sphere points lie on the sphere and ball points inside")
{
    mc_sphere(Integrand([](std::span<const double> x) {
                  CHECK(std::fabs(norm2(x) - 1.0) < 1e-14);
                  return 0.0;
              }),
              4, SeededRun{3, 1}, 200);
    mc_ball(Integrand([](std::span<const double> x) {
                CHECK(norm2(x) <= 1.0);
                return 0.0;
            }),
            3, SeededRun{3, 1}, 200);
}

TEST_CASE("radial law of ball points")
{
    for (std::size_t n : {3u, 6u}) {
        const auto est = mc_ball(Integrand([](std::span<const double> x) { return norm2(x); }), n, SeededRun{11, 4},
                                 200000);
        const double mean = est.value / ball_volume(n).value();
        const double se = est.std_error / ball_volume(n).value();
        CHECK(std::fabs(mean - double(n) / (n + 2)) <= 4.0 * se);
    }
}

TEST_CASE("reproducible for a fixed seed and shard count")
{
    const Integrand f = monomial_integrand({1.0, 0.5, 0.0});
    const auto a = mc_sphere(f, 3, SeededRun{42, 4}, 50001);
    const auto b = mc_sphere(f, 3, SeededRun{42, 4}, 50001);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
    const auto c = mc_sphere(f, 3, SeededRun{43, 4}, 50001);
    CHECK(a.value != c.value);
    CHECK(a.samples == 50001);
}

TEST_CASE("monomial means within four standard errors")
{
    const std::vector<std::vector<double>> cases = {{1, 0, 0}, {1, 1, 1}, {0.5, 0.25, 0, 2}, {-0.2, 1, 0}};
    unsigned seed = 100;
    for (const auto& beta : cases) {
        const RealMultiIndex idx(beta);
        const auto s = mc_sphere(monomial_integrand(beta), idx.dim(), SeededRun{seed++, 2}, 200000);
        CHECK(std::fabs(s.value - sphere_integral_real(idx).to_double()) <= 4.0 * s.std_error);
        const auto b = mc_ball(monomial_integrand(beta), idx.dim(), SeededRun{seed++, 2}, 200000);
        CHECK(std::fabs(b.value - ball_integral_real(idx).to_double()) <= 4.0 * b.std_error);
    }
}

TEST_CASE("infinite variance is flagged")
{
    CHECK_FALSE(mc_sphere(monomial_integrand({-0.2, 0, 0}), 3, SeededRun{1, 1}, 100).infinite_variance);
    CHECK(mc_sphere(monomial_integrand({-0.25, 0, 0}), 3, SeededRun{1, 1}, 100).infinite_variance);
    CHECK(mc_ball(monomial_integrand({-0.3, 0, 0}), 3, SeededRun{1, 1}, 100).infinite_variance);
}

TEST_CASE("plane-wave quadrature")
{
    for (std::size_t n : {3u, 4u, 7u}) {
        const std::vector<double> y = [n] {
            std::vector<double> v(n, 0.0);
            v[0] = 0.6;
            v[1] = 0.8;
            return v;
        }();
        const auto one = plane_wave_integral([](double) { return 1.0; }, y, n);
        CHECK(one.value == doctest::Approx(sphere_area(n).value()).epsilon(1e-12));
        CHECK(one.converged);
        // int (y.x)^2 = |y|^2 omega_n / n
        const auto sq = plane_wave_integral([](double t) { return t * t; }, y, n);
        CHECK(sq.value == doctest::Approx(sphere_area(n).value() / n).epsilon(1e-12));
        CHECK(sq.method == OracleMethod::plane_wave_1d);
    }
}

TEST_CASE("nested quadrature for n = 3")
{
    const auto one = quad_sphere_n3([](std::span<const double>) { return 1.0; }, 1e-10);
    CHECK(one.value == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-14));
    CHECK(one.converged);
    const auto m = quad_sphere_n3(
        [](std::span<const double> x) { return x[0] * x[0] * x[1] * x[1] * x[2] * x[2]; }, 1e-10);
    CHECK(std::fabs(m.value - 4.0 * std::numbers::pi / 105.0) <= 1e-13);
    const auto singular = quad_sphere_n3(
        [](std::span<const double> x) { return 1.0 / std::sqrt(std::fabs(x[0] * x[1] * x[2])); }, 1e-8);
    CHECK(std::fabs(singular.value - 77.7838482214365842658) <= 1e-9);
    CHECK(singular.converged);
    CHECK(singular.method == OracleMethod::quad_n3);
}

TEST_CASE("argument checks")
{
    const Integrand one([](std::span<const double>) { return 1.0; });
    CHECK_THROWS_AS(mc_sphere(one, 2, SeededRun{1, 1}, 10), DomainError);
    CHECK_THROWS_AS(mc_sphere(one, 3, SeededRun{1, 0}, 10), DomainError);
    CHECK_THROWS_AS(mc_sphere(one, 3, SeededRun{1, 1}, 1), DomainError);
}

TEST_CASE("closed form inside two standard errors for most seeds")
{
    const RealMultiIndex idx({1.0, 0.0, 0.0, 0.0});
    const double exact = sphere_integral_real(idx).to_double();
    int inside = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto est = mc_sphere(monomial_integrand({1.0, 0.0, 0.0, 0.0}), 4, SeededRun{seed, 1}, 20000);
        inside += std::fabs(est.value - exact) <= 2.0 * est.std_error ? 1 : 0;
    }
    CHECK(inside >= 25);
}

TEST_CASE("documented oracle values")
{
    const auto v5 = mc_ball(Integrand([](std::span<const double>) { return 1.0; }), 5, SeededRun{1, 1}, 10);
    CHECK(v5.value == doctest::Approx(8.0 * std::numbers::pi * std::numbers::pi / 15.0).epsilon(1e-14));

    const std::vector<double> e1 = {1.0, 0.0, 0.0};
    const auto sq = plane_wave_integral([](double t) { return t * t; }, e1, 3);
    CHECK(sq.value == doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-13));

    const std::vector<double> e1_5 = {1.0, 0.0, 0.0, 0.0, 0.0};
    const auto quartic = plane_wave_integral([](double t) { return std::pow(t, 4); }, e1_5, 5);
    CHECK(quartic.value == doctest::Approx(3.0 * sphere_area(5).value() / 35.0).epsilon(1e-12));

    const auto x2 = mc_ball(monomial_integrand({1.0, 0.0, 0.0}), 3, SeededRun{5, 2}, 200000);
    const double v3 = ball_volume(3).value();
    CHECK(std::fabs(x2.value / v3 - 0.2) <= 4.0 * x2.std_error / v3);
}
