#include "wallis/verify.hpp"

#include "wallis/closed_form.hpp"
#include "wallis/error.hpp"
#include "wallis/fourier_sphere.hpp"
#include "wallis/oracle.hpp"
#include "wallis/series_integrals.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace wallis {

namespace {

constexpr double kMaxZ = 4.0;
constexpr unsigned kShards = 8;

VerifyCase mc_case(std::string suite, std::string name, double expected, const OracleEstimate& est)
{
    VerifyCase c;
    c.suite = std::move(suite);
    c.name = std::move(name);
    c.method = to_string(est.method);
    c.expected = expected;
    c.estimate = est.value;
    c.std_error = est.std_error;
    c.z = est.std_error > 0.0 ? (est.value - expected) / est.std_error
                              : (est.value == expected ? 0.0 : INFINITY);
    c.pass = std::fabs(c.z) <= kMaxZ;
    return c;
}

VerifyCase deterministic_case(std::string suite, std::string name, double expected,
                              const OracleEstimate& est, double tolerance)
{
    VerifyCase c;
    c.suite = std::move(suite);
    c.name = std::move(name);
    c.method = to_string(est.method);
    c.expected = expected;
    c.estimate = est.value;
    c.std_error = est.std_error;
    c.z = (est.value - expected) / tolerance;
    c.pass = std::fabs(c.z) <= 1.0;
    return c;
}

OracleEstimate normalized(OracleEstimate est, double measure)
{
    est.value /= measure;
    est.std_error /= measure;
    return est;
}

void closed_form_suite(std::vector<VerifyCase>& out, std::uint64_t seed, std::uint64_t samples)
{
    const SeededRun run{seed, kShards};
    struct Case {
        const char* name;
        std::vector<double> beta;
        Domain domain;
    };
    const std::vector<Case> cases = {
        {"sphere n=3 x1^2 x2^2 x3^2", {1, 1, 1}, Domain::sphere},
        {"sphere n=4 x1^2", {1, 0, 0, 0}, Domain::sphere},
        {"sphere n=5 real beta", {0.5, 1.5, 0, 0.25, 0}, Domain::sphere},
        {"ball n=3 x1^2", {1, 0, 0}, Domain::ball},
        {"ball n=4 |x1|", {0.5, 0, 0, 0}, Domain::ball},
        {"ball n=3 |x1|^-0.4", {-0.2, 0, 0}, Domain::ball},
    };
    for (const auto& c : cases) {
        const RealMultiIndex idx(c.beta);
        const bool sphere = c.domain == Domain::sphere;
        const double expected =
            (sphere ? sphere_integral_real(idx) : ball_integral_real(idx)).to_double();
        const Integrand f = monomial_integrand(c.beta);
        const OracleEstimate est = sphere ? mc_sphere(f, idx.dim(), run, samples)
                                          : mc_ball(f, idx.dim(), run, samples);
        out.push_back(mc_case("closed-form", c.name, expected, est));
    }

    const double singular =
        sphere_integral_real(RealMultiIndex({-0.25, -0.25, -0.25})).to_double();
    const OracleEstimate quad = quad_sphere_n3(
        [](std::span<const double> x) {
            return 1.0 / std::sqrt(std::fabs(x[0]) * std::fabs(x[1]) * std::fabs(x[2]));
        },
        1e-6);
    out.push_back(deterministic_case("closed-form", "quad n=3 prod |x_k|^-1/2", singular, quad, 1e-5));

    const std::vector<double> y = {1.0, 0.0, 0.0, 0.0};
    const OracleEstimate wave = plane_wave_integral([](double t) { return std::pow(t, 6); }, y, 4);
    const double wallis = sphere_integral_int(IntMultiIndex({3, 0, 0, 0}), false).to_double();
    out.push_back(deterministic_case("closed-form", "plane wave n=4 |t|^6", wallis, wave, 1e-9));
}

void fourier_suite(std::vector<VerifyCase>& out, std::uint64_t seed, std::uint64_t samples)
{
    const SeededRun run{seed, kShards};
    struct Case {
        const char* name;
        std::vector<long> alpha;
        std::vector<double> xi;
    };
    const std::vector<Case> cases = {
        {"n=3 alpha=(2,1,0)", {2, 1, 0}, {0.1, 0.2, 0.3}},
        {"n=4 alpha=(1,0,0,0)", {1, 0, 0, 0}, {0.5, 0.0, 0.0, 0.0}},
        {"n=3 alpha=(2,2,0)", {2, 2, 0}, {1.0, -0.5, 2.0}},
    };
    for (const auto& c : cases) {
        const IntMultiIndex alpha(c.alpha);
        const std::complex<double> exact = transform_exact(alpha, c.xi);
        const auto est = mc_sphere_complex(
            [&](std::span<const double> x) {
                double mono = 1.0;
                double phase = 0.0;
                for (std::size_t k = 0; k < x.size(); ++k) {
                    mono *= std::pow(x[k], static_cast<double>(c.alpha[k]));
                    phase += x[k] * c.xi[k];
                }
                return mono * std::exp(std::complex<double>(0.0, -phase));
            },
            alpha.dim(), run, samples);
        OracleEstimate re{est.value.real(), est.std_error_real, est.samples};
        OracleEstimate im{est.value.imag(), est.std_error_imag, est.samples};
        out.push_back(mc_case("fourier", std::string(c.name) + " re", exact.real(), re));
        out.push_back(mc_case("fourier", std::string(c.name) + " im", exact.imag(), im));
    }
}

double t_coth(double t)
{
    return t == 0.0 ? 1.0 : t / std::tanh(t);
}

double t_over_sin(double t)
{
    return t == 0.0 ? 1.0 : t / std::sin(t);
}

void series_suite(std::vector<VerifyCase>& out, std::uint64_t seed, std::uint64_t samples)
{
    const SeededRun run{seed, kShards};
    {
        const IntMultiIndex alpha({2, 0, 0});
        const auto r = series_integral(SeriesSpec(SeriesKind::t_coth), alpha, Domain::sphere, true, 1e-13);
        const auto est = mc_sphere(
            Integrand([](std::span<const double> x) { return t_coth(x[0] * x[0]); }), 3, run, samples);
        out.push_back(mc_case("series", "coth sphere alpha=(2,0,0)", r.value,
                              normalized(est, sphere_area(3).value())));
    }
    {
        const IntMultiIndex alpha({1, 1, 0});
        const auto r =
            series_integral(SeriesSpec(SeriesKind::t_over_sin), alpha, Domain::ball, true, 1e-13);
        const auto est = mc_ball(
            Integrand([](std::span<const double> x) { return t_over_sin(x[0] * x[1]); }), 3, run, samples);
        out.push_back(mc_case("series", "sin-recip ball alpha=(1,1,0)", r.value,
                              normalized(est, ball_volume(3).value())));
    }
    {
        const IntMultiIndex alpha({2, 2, 0});
        const auto r = series_integral(SeriesSpec(SeriesKind::tan), alpha, Domain::sphere, false, 1e-13);
        const auto est = mc_sphere(
            Integrand([](std::span<const double> x) { return std::tan(x[0] * x[0] * x[1] * x[1]); }), 3, run,
            samples);
        out.push_back(mc_case("series", "tan sphere alpha=(2,2,0)", r.value, est));
    }
    {
        const RealMultiIndex beta({0.5, 0.5, 0.0});
        const auto r =
            series_integral(SeriesSpec(SeriesKind::sec_cubed), beta, Domain::ball, false, 1e-13);
        const auto est = mc_ball(
            Integrand([](std::span<const double> x) {
                return std::pow(1.0 / std::cos(std::sqrt(std::fabs(x[0] * x[1]))), 3);
            }),
            3, run, samples);
        out.push_back(mc_case("series", "sec3 ball beta=(0.5,0.5,0)", r.value, est));
    }
}

} // namespace

std::vector<VerifyCase> run_verification(const std::string& suite, std::uint64_t seed,
                                         std::uint64_t samples)
{
    if (suite != "all" && suite != "closed-form" && suite != "fourier" && suite != "series") {
        throw DomainError("unknown suite '" + suite + "' (expected closed-form, fourier, series, all)");
    }
    if (samples < 2) {
        throw DomainError("verify needs at least 2 samples");
    }
    std::vector<VerifyCase> out;
    if (suite == "all" || suite == "closed-form") {
        closed_form_suite(out, seed, samples);
    }
    if (suite == "all" || suite == "fourier") {
        fourier_suite(out, seed + 1, samples);
    }
    if (suite == "all" || suite == "series") {
        series_suite(out, seed + 2, samples);
    }
    return out;
}

} // namespace wallis
