#include "brieskorn/continued_fraction.hpp"

#include <stdexcept>

namespace brieskorn {

HJExpansion hj_expand(const Integer& a, const Integer& b) {
  if (b >= 0) throw std::invalid_argument("hj_expand: denominator must be negative");
  if (b <= -a) throw std::invalid_argument("hj_expand: need -a < b");
  if (gcd(a, b) != 1) throw std::invalid_argument("hj_expand: numerator and denominator not coprime");

  HJExpansion out{a, b, {}};
  // x < -1 at every step, so floor(x) <= -2.
  Rational x = make_rational(a, b);
  for (;;) {
    Integer t = floor(x);
    out.terms.push_back(t);
    Rational frac = x - t;
    if (frac == 0) break;
    x = -1 / frac;  // x = t - 1/y
  }
  return out;
}

Rational continued_fraction_value(const std::vector<Integer>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty continued fraction");
  Rational value = terms.back();
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    if (value == 0) throw std::domain_error("continued fraction has a zero tail");
    value = Rational(*it) - 1 / value;
  }
  return value;
}

}  // namespace brieskorn
