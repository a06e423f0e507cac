#include <doctest.h>

#include "wallis/closed_form.hpp"
#include "wallis/error.hpp"
#include "wallis/oracle.hpp"
#include "wallis/series_integrals.hpp"

#include <cmath>
#include <algorithm>
#include <functional>
#include <random>
#include <vector>

using namespace wallis;

namespace {

const std::vector<SeriesKind> kAllKinds = {SeriesKind::t_coth, SeriesKind::t_over_sin, SeriesKind::tan,
                                           SeriesKind::tan_cubed, SeriesKind::sec, SeriesKind::sec_cubed};

double direct(SeriesKind kind, double t)
{
    switch (kind) {
    case SeriesKind::t_coth:
        return t == 0.0 ? 1.0 : t / std::tanh(t);
    case SeriesKind::t_over_sin:
        return t == 0.0 ? 1.0 : t / std::sin(t);
    case SeriesKind::tan:
        return std::tan(t);
    case SeriesKind::tan_cubed:
        return std::pow(std::tan(t), 3);
    case SeriesKind::sec:
        return 1.0 / std::cos(t);
    case SeriesKind::sec_cubed:
        return std::pow(1.0 / std::cos(t), 3);
    }
    return NAN;
}

} // namespace

TEST_CASE("leading coefficients")
{
    CHECK(SeriesSpec(SeriesKind::t_coth).coefficient(0) == 1);
    CHECK(SeriesSpec(SeriesKind::t_coth).coefficient(1) == Rational(1, 3));
    CHECK(SeriesSpec(SeriesKind::t_coth).coefficient(2) == Rational(-1, 45));
    CHECK(SeriesSpec(SeriesKind::t_over_sin).coefficient(1) == Rational(1, 6));
    CHECK(SeriesSpec(SeriesKind::t_over_sin).coefficient(2) == Rational(7, 360));
    CHECK(SeriesSpec(SeriesKind::tan).coefficient(1) == 1);
    CHECK(SeriesSpec(SeriesKind::tan).coefficient(2) == Rational(1, 3));
    CHECK(SeriesSpec(SeriesKind::tan).coefficient(3) == Rational(2, 15));
    CHECK(tan_cubed_coefficient(1) == 0);
    CHECK(tan_cubed_coefficient(2) == 1);
    CHECK(tan_cubed_coefficient(3) == 1);
    CHECK(tan_cubed_coefficient(4) == Rational(11, 15));
    CHECK(SeriesSpec(SeriesKind::sec).coefficient(2) == Rational(5, 24));
    CHECK(sec_cubed_coefficient(0) == 1);
    CHECK(sec_cubed_coefficient(1) == Rational(3, 2));
    CHECK(sec_cubed_coefficient(2) == Rational(11, 8));
}

TEST_CASE("scalar partial sums match the functions")
{
    for (SeriesKind kind : kAllKinds) {
        const SeriesSpec spec(kind);
        for (double t : {0.3, 0.9}) {
            CAPTURE(to_string(kind));
            CAPTURE(t);
            CHECK(std::fabs(series_scalar(spec, t, 48) - direct(kind, t)) <= 1e-10);
        }
    }
    CHECK(series_scalar(SeriesSpec(SeriesKind::tan_cubed), 0.5, 60) == doctest::Approx(0.1630420171).epsilon(1e-9));
    CHECK(series_scalar(SeriesSpec(SeriesKind::tan_cubed), 1.0, 64) == doctest::Approx(3.7775217478).epsilon(1e-6));
    CHECK(series_scalar(SeriesSpec(SeriesKind::sec_cubed), 0.7, 60) == doctest::Approx(2.2350358601).epsilon(1e-9));
}

TEST_CASE("majorant bounds the absolute series")
{
    for (SeriesKind kind : kAllKinds) {
        const SeriesSpec spec(kind);
        const double rho = 0.8 * spec.radius();
        double sum = 0.0;
        for (int k = spec.first_index(); k <= spec.last_index(); ++k) {
            sum += std::fabs(spec.coefficient_double(k)) * std::pow(rho, spec.power_of_t(k));
        }
        CAPTURE(to_string(kind));
        CHECK(sum <= spec.majorant(rho) * (1.0 + 1e-12));
        CHECK(sum >= spec.majorant(rho) * 0.999);
    }
}

TEST_CASE("tan family with an odd exponent is exactly zero")
{
    for (SeriesKind kind : {SeriesKind::tan, SeriesKind::tan_cubed}) {
        for (Domain d : {Domain::sphere, Domain::ball}) {
            const auto r = series_integral(SeriesSpec(kind), IntMultiIndex({1, 2, 0}), d, false, 1e-12);
            CHECK(r.value == 0.0);
            CHECK(r.terms_used == 0);
            CHECK(r.remainder_bound == 0.0);
        }
    }
}

TEST_CASE("integrated coth against deterministic quadrature")
{
    const auto r = series_integral(SeriesSpec(SeriesKind::t_coth), IntMultiIndex({2, 0, 0}), Domain::sphere,
                                   false, 1e-13);
    const auto q = quad_sphere_n3(
        [](std::span<const double> x) {
            const double t = x[0] * x[0];
            return t == 0.0 ? 1.0 : t / std::tanh(t);
        },
        1e-10);
    CHECK(q.converged);
    CHECK(std::fabs(r.value - q.value) <= 1e-10 * std::fabs(q.value));
    // tol limits the truncation tail; the bound adds a rounding allowance
    CHECK(r.remainder_bound <= 1e-12);
    CHECK(std::fabs(r.value - q.value) <= r.remainder_bound + q.std_error);
}

TEST_CASE("real exponents against deterministic quadrature")
{
    const auto r = series_integral(SeriesSpec(SeriesKind::sec_cubed), RealMultiIndex({0.5, 0.5, 0.0}),
                                   Domain::sphere, false, 1e-12);
    const auto q = quad_sphere_n3(
        [](std::span<const double> x) { return std::pow(1.0 / std::cos(std::sqrt(std::fabs(x[0] * x[1]))), 3); },
        1e-10);
    CHECK(std::fabs(r.value - q.value) <= 1e-9 * std::fabs(q.value));
}

TEST_CASE("remainder bound dominates the true tail")
{
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> kind_pick(0, 5);
    std::uniform_int_distribution<long> expo(0, 3);
    std::uniform_int_distribution<int> dim_pick(3, 5);
    std::uniform_real_distribution<double> log_tol(-11.0, -5.0);
    for (int c = 0; c < 30; ++c) {
        const SeriesSpec spec(kAllKinds[kind_pick(rng)]);
        const std::size_t n = static_cast<std::size_t>(dim_pick(rng));
        std::vector<long> a(n, 0);
        do {
            for (auto& v : a) {
                v = spec.odd() ? 2 * expo(rng) : expo(rng);
            }
        } while (std::all_of(a.begin(), a.end(), [](long v) { return v == 0; }));
        const IntMultiIndex alpha(a);
        const Domain d = (c % 2 == 0) ? Domain::sphere : Domain::ball;
        const double tol = std::pow(10.0, log_tol(rng));
        const auto r = series_integral(spec, alpha, d, true, tol);
        const auto terms = series_terms(spec, alpha, d, true, spec.last_index() - spec.first_index() + 1);
        long double reference = 0.0L;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            reference += *it;
        }
        CAPTURE(c);
        CAPTURE(to_string(spec.kind()));
        CHECK(r.terms_used < static_cast<int>(terms.size()) / 2);
        CHECK(std::fabs(r.value - static_cast<double>(reference)) <= r.remainder_bound);
        CHECK(r.remainder_bound <= tol);
    }
}

TEST_CASE("argument checks")
{
    const SeriesSpec coth(SeriesKind::t_coth);
    CHECK_THROWS_AS(series_integral(coth, IntMultiIndex({1, 0, 0}), Domain::sphere, false, 0.0), DomainError);
    CHECK_THROWS_AS(series_integral(SeriesSpec(SeriesKind::tan), RealMultiIndex({1.0, 0.0, 0.0}),
                                    Domain::sphere, false, 1e-10),
                    DomainError);
    CHECK_THROWS_AS(series_integral(coth, RealMultiIndex({-0.1, 1.0, 0.0}), Domain::ball, false, 1e-10),
                    DomainError);
    CHECK(parse_series_kind("sin-recip") == SeriesKind::t_over_sin);
    CHECK(parse_series_kind("tan3") == SeriesKind::tan_cubed);
    CHECK_THROWS_AS(parse_series_kind("cot"), DomainError);
}

TEST_CASE("ball terms are sphere terms over the radial factor")
{
    for (SeriesKind kind : kAllKinds) {
        const SeriesSpec spec(kind);
        const std::vector<long> a = {2, 0, 2};
        const auto sphere = series_terms(spec, IntMultiIndex(a), Domain::sphere, false, 12);
        const auto ball = series_terms(spec, IntMultiIndex(a), Domain::ball, false, 12);
        for (int j = 0; j < 12; ++j) {
            const int p = spec.power_of_t(spec.first_index() + j);
            // integral of x^{p alpha} over the ball = sphere value / (p |alpha| + n)
            const double factor = p * 4.0 + 3.0;
            CAPTURE(to_string(kind));
            CAPTURE(j);
            CHECK(ball[j] * factor == doctest::Approx(sphere[j]).epsilon(1e-13));
        }
    }
}
