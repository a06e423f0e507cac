#include "wallis/specfun.hpp"

#include "double_double.hpp"
#include "wallis/error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace wallis {

namespace {

// (-1)^k (zeta(k) - 1) / k for k = 2, 3, ...; ln Gamma(2 + z) = (1 - gamma) z + sum c_k z^k.
constexpr double kOneMinusEulerGamma = 0.422784335098467139393;
constexpr std::array<double, 39> kLogGammaTaylor = {
    0.322467033424113218236,     -0.0673523010531980951332,   0.020580808427784547879,
    -0.00738555102867398526627,  0.00289051033074152328575,   -0.00119275391170326097711,
    0.000509669524743042422336,  -0.000223154758453579379761, 0.0000994575127818085337146,
    -0.0000449262367381331417002, 0.0000205072127756706915532, -0.00000943948827526839590399,
    0.00000437486678990748780418, -0.00000203921575380136623678, 9.55141213040741983286e-7,
    -4.49246919876456604329e-7,  2.12071848055546658692e-7,   -1.00432248239680996087e-7,
    4.76981016936398056576e-8,   -2.27110946089431649103e-8,  1.08386592148969540911e-8,
    -5.18347504197004665512e-9,  2.48367454380247831719e-9,   -1.19214014058609120744e-9,
    5.73136724167886201333e-10,  -2.75952288512423314518e-10, 1.33047643742444894815e-10,
    -6.42296456383810002208e-11, 3.10442477473222727624e-11,  -1.50213840807541421709e-11,
    7.2759744802390796625e-12,   -3.52774247657591508362e-12, 1.7119917905596179086e-12,
    -8.3153858414202848198e-13,  4.04220052528944006554e-13,  -1.96647563109661649041e-13,
    9.57363038783855576378e-14,  -4.66407602642837422458e-14, 2.27373696006597232063e-14,
};

// ln Gamma(2 + z) for |z| <= 0.5.
double log_gamma_near_two(double z)
{
    double acc = 0.0;
    for (auto it = kLogGammaTaylor.rbegin(); it != kLogGammaTaylor.rend(); ++it) {
        acc = acc * z + *it;
    }
    return z * (kOneMinusEulerGamma + z * acc);
}

// B_{2k} / (2k (2k - 1)) for k = 1..9.
constexpr std::array<double, 9> kStirling = {
    1.0 / 12.0,       -1.0 / 360.0,    1.0 / 1260.0,       -1.0 / 1680.0,    1.0 / 1188.0,
    -691.0 / 360360.0, 1.0 / 156.0,    -3617.0 / 122400.0, 43867.0 / 244188.0,
};

double log_gamma_stirling(double x)
{
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
        series = series * inv2 + *it;
    }
    constexpr double half_log_two_pi = 0.918938533204672741780329736406;
    return (x - 0.5) * std::log(x) - x + half_log_two_pi + series * inv;
}

constexpr int kExactDoubleFactorialTable = 256;

const std::vector<double>& log_double_factorial_table()
{
    static const std::vector<double> table = [] {
        std::vector<double> t(kExactDoubleFactorialTable + 1);
        for (int k = 0; k <= kExactDoubleFactorialTable; ++k) {
            t[k] = std::log(to_double(Rational(double_factorial_exact(k))));
        }
        return t;
    }();
    return table;
}

void require_even_index(int two_k, const char* what)
{
    if (two_k < 0 || two_k % 2 != 0 || two_k > kNumberSequenceCap) {
        throw DomainError(std::string(what) + ": index must be even and in [0, " +
                          std::to_string(kNumberSequenceCap) + "], got " + std::to_string(two_k));
    }
}

} // namespace

double log_gamma(double x)
{
    if (!std::isfinite(x) || x <= 0.0) {
        throw DomainError("log_gamma: argument must be positive and finite");
    }
    if (x >= 10.0) {
        return log_gamma_stirling(x);
    }
    if (x < 0.5) {
        // Gamma(x) = Gamma(x + 1) / x with x + 1 in [1, 1.5).
        return log_gamma_near_two(x) - std::log1p(x) - std::log(x);
    }
    if (x < 1.5) {
        // Gamma(1 + z) = Gamma(2 + z) / (1 + z).
        const double z = x - 1.0;
        return log_gamma_near_two(z) - std::log1p(z);
    }
    if (x < 2.5) {
        return log_gamma_near_two(x - 2.0);
    }
    double shifted = x;
    double product = 1.0;
    while (shifted >= 2.5) {
        shifted -= 1.0;
        product *= shifted;
    }
    return std::log(product) + log_gamma_near_two(shifted - 2.0);
}

LogSigned double_factorial(long k)
{
    if (k < -1) {
        throw DomainError("double_factorial: k must be >= -1, got " + std::to_string(k));
    }
    if (k <= 0) {
        return LogSigned::one();
    }
    if (k <= kExactDoubleFactorialTable) {
        return LogSigned::from_log(log_double_factorial_table()[static_cast<std::size_t>(k)]);
    }
    const double ln2 = std::numbers::ln2;
    if (k % 2 == 1) {
        // (2m - 1)!! = 2^m Gamma(m + 1/2) / sqrt(pi)
        const double m = static_cast<double>((k + 1) / 2);
        return LogSigned::from_log(m * ln2 + log_gamma(m + 0.5) - 0.5 * std::log(std::numbers::pi));
    }
    // (2m)!! = 2^m m!
    const double m = static_cast<double>(k / 2);
    return LogSigned::from_log(m * ln2 + log_gamma(m + 1.0));
}

double psi(double nu, double t)
{
    if (!(nu >= 0.0) || !std::isfinite(nu)) {
        throw DomainError("psi: order must be >= 0");
    }
    if (!(std::fabs(t) <= kPsiMaxArgument)) {
        throw DomainError("psi: |t| must be <= 30, got " + std::to_string(t));
    }
    using detail::DoubleDouble;
    const double half = 0.5 * std::fabs(t);
    const DoubleDouble quarter_t2 = detail::two_prod(half, half);
    const DoubleDouble order{nu, 0.0};

    DoubleDouble term{1.0, 0.0};
    DoubleDouble sum{1.0, 0.0};
    double max_term = 1.0;
    for (int k = 1; k < 1000; ++k) {
        const DoubleDouble kk{static_cast<double>(k), 0.0};
        const DoubleDouble denom = kk * (order + kk);
        term = -(term * quarter_t2) / denom;
        sum = sum + term;
        const double mag = std::fabs(term.hi);
        if (mag <= 1e-32 * max_term) {
            break;
        }
        max_term = std::max(max_term, mag);
    }
    // tgamma is accurate to a few ulps where it does not overflow;
    // exp(-ln Gamma) would amplify the log's absolute error.
    const double prefactor = nu <= 160.0 ? std::exp2(-nu) / std::tgamma(nu + 1.0)
                                         : std::exp2(-nu) * std::exp(-log_gamma(nu + 1.0));
    return prefactor * (sum.hi + sum.lo);
}

const Rational& bernoulli(int two_k)
{
    require_even_index(two_k, "bernoulli");
    static const std::vector<Rational> table = [] {
        std::vector<Rational> b(kNumberSequenceCap + 1);
        b[0] = 1;
        for (int m = 1; m <= kNumberSequenceCap; ++m) {
            // sum_{j=0}^{m} C(m+1, j) B_j = 0
            Rational acc = 0;
            for (int j = 0; j < m; ++j) {
                if (b[j] != 0) {
                    acc += Rational(binomial(m + 1, j)) * b[j];
                }
            }
            b[m] = -acc / (m + 1);
        }
        return b;
    }();
    return table[static_cast<std::size_t>(two_k)];
}

const Rational& euler_number(int two_k)
{
    require_even_index(two_k, "euler_number");
    static const std::vector<Rational> table = [] {
        // sec(t) cos(t) = 1: sum_{j=0}^{k} C(2k, 2j) E_{2j} = 0 for k >= 1.
        std::vector<Rational> e(kNumberSequenceCap / 2 + 1);
        e[0] = 1;
        for (int k = 1; k <= kNumberSequenceCap / 2; ++k) {
            BigInt acc = 0;
            for (int j = 0; j < k; ++j) {
                acc += binomial(2 * k, 2 * j) * numerator_of(e[j]);
            }
            e[k] = Rational(-acc);
        }
        return e;
    }();
    return table[static_cast<std::size_t>(two_k / 2)];
}

Rational tau(int two_k_minus_1)
{
    if (two_k_minus_1 < 1 || two_k_minus_1 % 2 == 0) {
        throw DomainError("tau: index must be odd and >= 1, got " + std::to_string(two_k_minus_1));
    }
    const unsigned k = static_cast<unsigned>(two_k_minus_1 + 1) / 2;
    const BigInt pow2 = BigInt(1) << (2 * k);
    Rational value(pow2 * (pow2 - 1), factorial(2 * k));
    return k % 2 == 1 ? value : Rational(-value);
}

} // namespace wallis
