#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace revolutio {

// GMP rationals are kept canonical (reduced, positive denominator) by every
// arithmetic operation, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q" and decimal literals such as "0.25".
Rational parse_rational(std::string_view text);

// Some d with d*d | n: small-prime trial division, then a perfect-square test
// on the cofactor. Exact for every |n| below 10^12.
Integer square_part_root(const Integer& n);

}  // namespace revolutio
