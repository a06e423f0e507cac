#include "wallis/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace wallis {

namespace {

long bit_length(const BigInt& v)
{
    if (v == 0) {
        return 0;
    }
    return static_cast<long>(boost::multiprecision::msb(v)) + 1;
}

} // namespace

double to_double(const Rational& q)
{
    BigInt num = numerator_of(q);
    const BigInt den = denominator_of(q);
    if (num == 0) {
        return 0.0;
    }
    const bool negative = num < 0;
    if (negative) {
        num = -num;
    }
    // Scale so the integer quotient carries 64+ significant bits, then let the
    // final ldexp place the exponent.
    const long shift = 66 - (bit_length(num) - bit_length(den));
    BigInt scaled_num = num;
    BigInt scaled_den = den;
    if (shift > 0) {
        scaled_num <<= static_cast<unsigned>(shift);
    } else if (shift < 0) {
        scaled_den <<= static_cast<unsigned>(-shift);
    }
    BigInt remainder;
    BigInt quotient;
    boost::multiprecision::divide_qr(scaled_num, scaled_den, quotient, remainder);
    // Sticky bit keeps round-to-nearest honest when the quotient is truncated.
    if (remainder != 0) {
        quotient |= 1;
    }
    const long qbits = bit_length(quotient);
    const long drop = qbits > 64 ? qbits - 64 : 0;
    const BigInt kept = quotient >> static_cast<unsigned>(drop);
    const BigInt lost = quotient - (kept << static_cast<unsigned>(drop));
    std::uint64_t mantissa = kept.convert_to<std::uint64_t>();
    if (lost != 0) {
        mantissa |= 1;
    }
    const double result = std::ldexp(static_cast<double>(mantissa), static_cast<int>(drop - shift));
    return negative ? -result : result;
}

std::string to_string(const Rational& q)
{
    const BigInt den = denominator_of(q);
    if (den == 1) {
        return numerator_of(q).str();
    }
    return numerator_of(q).str() + "/" + den.str();
}

BigInt factorial(unsigned k)
{
    BigInt r = 1;
    for (unsigned i = 2; i <= k; ++i) {
        r *= i;
    }
    return r;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt double_factorial_exact(long k)
{
    if (k < -1) {
        throw std::invalid_argument("double factorial of k < -1");
    }
    BigInt r = 1;
    for (long i = k; i > 1; i -= 2) {
        r *= i;
    }
    return r;
}

} // namespace wallis
