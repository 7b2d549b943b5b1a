#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>

namespace mzv {

// Arbitrary-precision integers and rationals. The rational backend keeps
// values canonical: positive denominator, gcd(num, den) = 1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q > 0, or just "p" for integers.
std::string to_string(const Rational& r);

Integer factorial(unsigned n);

// n!/(k!(n-k)!) for k <= n, and 0 when k > n.
Integer binomial(unsigned n, unsigned k);

// n! / (parts[0]! ... parts[m-1]! (n - sum parts)!). Requires sum(parts) <= n.
Integer multinomial(unsigned n, std::span<const unsigned> parts);

// Bernoulli number B_m with the B_1 = -1/2 convention, i.e. the coefficients
// of x/(e^x - 1) = sum B_m x^m / m!. Computed by exact series division of x
// by e^x - 1; memoized behind a lock, so concurrent readers are fine.
Rational bernoulli(unsigned m);

}  // namespace mzv
