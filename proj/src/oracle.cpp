#include "wallis/oracle.hpp"

#include "wallis/closed_form.hpp"
#include "wallis/error.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <utility>

namespace wallis {

namespace {

// Running mean / sum of squared deviations (Welford), mergeable (Chan et al.).
struct Moments {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double x)
    {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    void merge(const Moments& o)
    {
        if (o.count == 0) {
            return;
        }
        if (count == 0) {
            *this = o;
            return;
        }
        const double na = static_cast<double>(count);
        const double nb = static_cast<double>(o.count);
        const double total = na + nb;
        const double delta = o.mean - mean;
        mean += delta * nb / total;
        m2 += o.m2 + delta * delta * na * nb / total;
        count += o.count;
    }

    [[nodiscard]] double std_error() const
    {
        if (count < 2) {
            return 0.0;
        }
        const double n = static_cast<double>(count);
        return std::sqrt(m2 / (n - 1.0) / n);
    }
};

std::mt19937_64 shard_engine(std::uint64_t seed, unsigned shard)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), shard,
                      0x9e3779b9u};
    return std::mt19937_64(seq);
}

// Draws uniform points on the sphere (or in the ball) and feeds them to visit.
template <class Visit>
void sample_points(std::mt19937_64& engine, std::size_t n, bool ball, std::uint64_t samples, Visit&& visit)
{
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> uniform;
    std::vector<double> x(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::uint64_t s = 0; s < samples; ++s) {
        double r2 = 0.0;
        do {
            r2 = 0.0;
            for (auto& xi : x) {
                xi = normal(engine);
                r2 += xi * xi;
            }
        } while (r2 == 0.0);
        double scale = 1.0 / std::sqrt(r2);
        if (ball) {
            scale *= std::pow(uniform(engine), inv_n);
        }
        for (auto& xi : x) {
            xi *= scale;
        }
        visit(std::span<const double>(x));
    }
}

template <class ShardFn>
void run_shards(SeededRun run, std::uint64_t samples, ShardFn&& shard_fn)
{
    const unsigned shards = std::max(1u, run.shards);
    std::vector<std::thread> threads;
    threads.reserve(shards);
    for (unsigned s = 0; s < shards; ++s) {
        const std::uint64_t count = samples / shards + (s < samples % shards ? 1 : 0);
        threads.emplace_back([&, s, count] { shard_fn(s, count); });
    }
    for (auto& t : threads) {
        t.join();
    }
}

void check_mc_arguments(std::size_t n, SeededRun run, std::uint64_t samples)
{
    if (n < kMinDimension) {
        throw DomainError("Monte Carlo oracle needs n >= 3");
    }
    if (run.shards == 0) {
        throw DomainError("Monte Carlo oracle needs at least one shard");
    }
    if (samples < 2) {
        throw DomainError("Monte Carlo oracle needs at least 2 samples");
    }
}

OracleEstimate mc_real(const Integrand& f, std::size_t n, SeededRun run, std::uint64_t samples, bool ball)
{
    check_mc_arguments(n, run, samples);
    const unsigned shards = run.shards;
    std::vector<Moments> partial(shards);
    run_shards(run, samples, [&](unsigned s, std::uint64_t count) {
        auto engine = shard_engine(run.seed, s);
        sample_points(engine, n, ball, count, [&](std::span<const double> x) { partial[s].push(f.fn(x)); });
    });
    Moments total;
    for (const auto& p : partial) {
        total.merge(p);
    }
    const double measure = ball ? ball_volume(n).value() : sphere_area(n).value();
    OracleEstimate est;
    est.value = measure * total.mean;
    est.std_error = measure * total.std_error();
    est.samples = total.count;
    est.method = ball ? OracleMethod::mc_ball : OracleMethod::mc_sphere;
    est.infinite_variance = f.min_half_exponent <= -0.25;
    return est;
}

// Evaluations exactly on a singular set (possible at panel endpoints) carry no
// mass; count them as zero.
double finite_or_zero(double v)
{
    return std::isfinite(v) ? v : 0.0;
}

} // namespace

std::string to_string(OracleMethod m)
{
    switch (m) {
    case OracleMethod::mc_sphere:
        return "mc_sphere";
    case OracleMethod::mc_ball:
        return "mc_ball";
    case OracleMethod::plane_wave_1d:
        return "plane_wave_1d";
    case OracleMethod::quad_n3:
        return "quad_n3";
    }
    return "?";
}

Integrand monomial_integrand(std::vector<double> beta)
{
    const double min_beta = beta.empty() ? 0.0 : *std::min_element(beta.begin(), beta.end());
    return Integrand(
        [beta = std::move(beta)](std::span<const double> x) {
            double v = 1.0;
            for (std::size_t k = 0; k < beta.size(); ++k) {
                if (beta[k] != 0.0) {
                    v *= std::pow(std::fabs(x[k]), 2.0 * beta[k]);
                }
            }
            return v;
        },
        min_beta);
}

OracleEstimate mc_sphere(const Integrand& f, std::size_t n, SeededRun run, std::uint64_t samples)
{
    return mc_real(f, n, run, samples, false);
}

OracleEstimate mc_ball(const Integrand& f, std::size_t n, SeededRun run, std::uint64_t samples)
{
    return mc_real(f, n, run, samples, true);
}

ComplexOracleEstimate mc_sphere_complex(const ComplexPointFunction& f, std::size_t n, SeededRun run,
                                        std::uint64_t samples)
{
    check_mc_arguments(n, run, samples);
    const unsigned shards = run.shards;
    std::vector<Moments> re(shards);
    std::vector<Moments> im(shards);
    run_shards(run, samples, [&](unsigned s, std::uint64_t count) {
        auto engine = shard_engine(run.seed, s);
        sample_points(engine, n, false, count, [&](std::span<const double> x) {
            const std::complex<double> v = f(x);
            re[s].push(v.real());
            im[s].push(v.imag());
        });
    });
    Moments re_total;
    Moments im_total;
    for (unsigned s = 0; s < shards; ++s) {
        re_total.merge(re[s]);
        im_total.merge(im[s]);
    }
    const double measure = sphere_area(n).value();
    ComplexOracleEstimate est;
    est.value = {measure * re_total.mean, measure * im_total.mean};
    est.std_error_real = measure * re_total.std_error();
    est.std_error_imag = measure * im_total.std_error();
    est.samples = re_total.count;
    return est;
}

OracleEstimate plane_wave_integral(const std::function<double(double)>& g, std::span<const double> y,
                                   std::size_t n)
{
    if (n < kMinDimension) {
        throw DomainError("plane_wave_integral needs n >= 3");
    }
    if (y.size() != n) {
        throw DomainError("plane_wave_integral: y has wrong dimension");
    }
    double r2 = 0.0;
    for (double v : y) {
        r2 += v * v;
    }
    const double r = std::sqrt(r2);
    const double weight_power = 0.5 * (static_cast<double>(n) - 3.0);
    auto integrand = [&](double t) {
        const double w = n == 3 ? 1.0 : std::pow((1.0 - t) * (1.0 + t), weight_power);
        return finite_or_zero(w * g(r * t));
    };
    boost::math::quadrature::tanh_sinh<double> integrator;
    double err_left = 0.0;
    double err_right = 0.0;
    const double left = integrator.integrate(integrand, -1.0, 0.0, 1e-13, &err_left);
    const double right = integrator.integrate(integrand, 0.0, 1.0, 1e-13, &err_right);
    const double scale = sphere_area(n - 1).value();

    OracleEstimate est;
    est.value = scale * (left + right);
    est.std_error = scale * (err_left + err_right);
    est.method = OracleMethod::plane_wave_1d;
    est.converged = est.std_error <= 1e-10;
    return est;
}

namespace {

// (cos, sin) of q pi/2 + u, or of q pi/2 + (pi/2 - u) when mirrored. Both stay
// accurate for small u, so singularities on the coordinate circles sit at u = 0.
std::pair<double, double> octant_angle(int q, bool mirror, double u)
{
    double c = std::cos(u);
    double s = std::sin(u);
    if (mirror) {
        std::swap(c, s);
    }
    switch (q & 3) {
    case 0:
        return {c, s};
    case 1:
        return {-s, c};
    case 2:
        return {-c, -s};
    default:
        return {s, -c};
    }
}

struct NestedResult {
    double value = 0.0;
    double outer_error = 0.0;
};

NestedResult nested_sphere_n3(const PointFunction& f, double inner_tol, double outer_tol)
{
    using std::numbers::pi;
    boost::math::quadrature::tanh_sinh<double> inner_integrator;
    boost::math::quadrature::tanh_sinh<double> outer_integrator;

    auto inner = [&](double st, double ct) {
        double total = 0.0;
        for (int piece = 0; piece < 8; ++piece) {
            auto along_phi = [&](double u) {
                const auto [c, s] = octant_angle(piece / 2, piece % 2 == 1, u);
                const double x[3] = {st * c, st * s, ct};
                return finite_or_zero(f(std::span<const double>(x, 3)));
            };
            total += inner_integrator.integrate(along_phi, 0.0, pi / 4, inner_tol);
        }
        return finite_or_zero(total * st);
    };

    NestedResult out;
    for (int piece = 0; piece < 4; ++piece) {
        auto along_theta = [&](double u) {
            const auto [c, s] = octant_angle(piece / 2, piece % 2 == 1, u);
            return inner(s, c);
        };
        double err = 0.0;
        out.value += outer_integrator.integrate(along_theta, 0.0, pi / 4, outer_tol, &err);
        out.outer_error += err;
    }
    return out;
}

} // namespace

OracleEstimate quad_sphere_n3(const PointFunction& f, double tolerance)
{
    // theta and phi are each cut into octants; every panel starts at a
    // coordinate circle in its own local angle.
    const NestedResult fine = nested_sphere_n3(f, 1e-13, 1e-12);
    const NestedResult coarse = nested_sphere_n3(f, 1e-10, 1e-12);

    OracleEstimate est;
    est.value = fine.value;
    est.std_error = fine.outer_error + std::fabs(fine.value - coarse.value);
    est.method = OracleMethod::quad_n3;
    est.converged = est.std_error <= tolerance;
    return est;
}

} // namespace wallis
