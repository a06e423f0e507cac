#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wallis {

using BigInt = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational, always normalized (lowest terms, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Nearest double to q.
double to_double(const Rational& q);

/// "p/q", or just "p" for integers.
std::string to_string(const Rational& q);

BigInt factorial(unsigned k);
BigInt binomial(unsigned n, unsigned k);
/// k!! with (-1)!! = 0!! = 1.
BigInt double_factorial_exact(long k);

} // namespace wallis
