#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hodge {

// Arbitrary-precision integers and rationals. mpq_class values produced by
// arithmetic are always canonical (positive denominator, gcd(num, den) = 1);
// the helpers below keep explicitly constructed values canonical too.
using Integer = mpz_class;
using Rational = mpq_class;

// n! as an exact integer. Requires n >= 0.
Integer factorial(int n);

// Binomial coefficient via the multiplicative formula; 0 outside 0 <= k <= n.
Integer binomial(int n, int k);

// num/den in canonical form. Requires den != 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// base^exponent with signed exponent. Requires base != 0 when exponent < 0.
Rational rational_pow(const Rational& base, int exponent);

// Parses "p", "-p" or "p/q" with q > 0 implied textually; result is
// canonicalized. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
// parse_rational(to_string(x)) == x for every x.
std::string to_string(const Rational& value);

} // namespace hodge
