/** @file rational.hpp

    @brief Exact rational scalars backed by GMP.

    mpq_class keeps values canonical (reduced, positive denominator) after
    every arithmetic operation.
*/
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace g1 {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;

/// Parses "p/q" or "p". Throws Error(ParseRational) on malformed input or q = 0.
Rational parse_rational(const std::string& s);

/// Formats as "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

/// num/den in lowest terms (den != 0).
Rational ratio(long num, long den);

/// Binomial coefficient as an exact integer; zero outside 0 <= r <= n.
Integer binomial(int n, int r);

} // namespace g1
