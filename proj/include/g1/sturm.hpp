/** @file sturm.hpp

    @brief Exact real-root counting with Sturm sequences.
*/
#pragma once

#include "g1/unipoly.hpp"

#include <vector>

namespace g1 {

/// Sturm chain p, p', -rem(...), ... of a nonzero polynomial.
std::vector<UniPoly> sturm_chain(const UniPoly& p);

/// Number of sign changes of the chain evaluated at x (zeros skipped).
int sign_variations(const std::vector<UniPoly>& chain, const Rational& x);

/// Number of distinct real roots in the closed interval [lo, hi].
/// Throws Error(Internal) for the zero polynomial.
int count_roots(const UniPoly& p, const Rational& lo, const Rational& hi);

} // namespace g1
