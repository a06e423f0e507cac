#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace wallis {

enum class OracleMethod { mc_sphere, mc_ball, plane_wave_1d, quad_n3 };

std::string to_string(OracleMethod m);

/// Result of a verification oracle. For Monte Carlo std_error is the sample
/// standard error; for quadrature it is the reported error estimate.
struct OracleEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    OracleMethod method = OracleMethod::mc_sphere;
    /// Set when the integrand has an exponent beta_k <= -1/4: the estimator's
    /// variance is infinite and std_error cannot be trusted.
    bool infinite_variance = false;
    /// False when a quadrature missed its tolerance.
    bool converged = true;
};

/// Complex-valued Monte Carlo estimate; standard errors per component.
struct ComplexOracleEstimate {
    std::complex<double> value;
    double std_error_real = 0.0;
    double std_error_imag = 0.0;
    std::uint64_t samples = 0;
    OracleMethod method = OracleMethod::mc_sphere;
};

/// Seed plus shard count. Shards draw from independent substreams and are
/// combined in shard order, so a given (seed, shards, samples) reproduces
/// bit-identical estimates regardless of thread scheduling.
struct SeededRun {
    std::uint64_t seed = 0;
    unsigned shards = 1;
};

using PointFunction = std::function<double(std::span<const double>)>;
using ComplexPointFunction = std::function<std::complex<double>(std::span<const double>)>;

/// A real integrand, plus the smallest half-exponent it contains (for
/// x^{2 beta}, min beta_k) so Monte Carlo can flag the infinite-variance regime.
struct Integrand {
    Integrand(PointFunction f, double min_half_exponent = 0.0)
        : fn(std::move(f)), min_half_exponent(min_half_exponent)
    {
    }

    PointFunction fn;
    double min_half_exponent;
};

/// prod_k |x_k|^{2 beta_k}
Integrand monomial_integrand(std::vector<double> beta);

/// omega_n times the mean of f over uniform sphere points g / |g|, g standard normal.
OracleEstimate mc_sphere(const Integrand& f, std::size_t n, SeededRun run, std::uint64_t samples);

/// v_n times the mean of f over uniform ball points (g / |g|) u^{1/n}.
OracleEstimate mc_ball(const Integrand& f, std::size_t n, SeededRun run, std::uint64_t samples);

/// Complex-valued sphere Monte Carlo (Fourier integrands).
ComplexOracleEstimate mc_sphere_complex(const ComplexPointFunction& f, std::size_t n, SeededRun run,
                                        std::uint64_t samples);

/// Plane-wave reduction of a sphere integral,
///   int g(y.x) dsigma(x) = omega_{n-1} int_{-1}^{1} (1 - t^2)^{(n-3)/2} g(|y| t) dt,
/// evaluated by tanh-sinh quadrature on [-1, 0] and [0, 1] to absolute tolerance 1e-10.
OracleEstimate plane_wave_integral(const std::function<double(double)>& g, std::span<const double> y,
                                   std::size_t n);

/// Deterministic nested quadrature over the unit sphere in R^3 in spherical
/// angles, with the (theta, phi) ranges split on the coordinate great circles
/// so integrable singularities there sit at panel endpoints.
OracleEstimate quad_sphere_n3(const PointFunction& f, double tolerance);

} // namespace wallis
