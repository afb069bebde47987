#pragma once

#include "brieskorn/arith.hpp"

#include <vector>

namespace brieskorn {

/// Negative continued fraction a/b = t1 - 1/(t2 - 1/(... - 1/tm)) with every
/// term <= -2. Used for the branch weights of a star-shaped resolution graph:
/// a_i / b_i with a_i > 0 and -a_i < b_i < 0.
struct HJExpansion {
  Integer numerator;    // a > 0
  Integer denominator;  // b, with -a < b < 0
  std::vector<Integer> terms;
};

/// Throws std::invalid_argument unless gcd(a, |b|) = 1 and -a < b < 0.
HJExpansion hj_expand(const Integer& a, const Integer& b);

/// Evaluates t1 - 1/(t2 - 1/(...)) for arbitrary integer terms. Throws
/// std::domain_error if an intermediate denominator vanishes.
Rational continued_fraction_value(const std::vector<Integer>& terms);

}  // namespace brieskorn
