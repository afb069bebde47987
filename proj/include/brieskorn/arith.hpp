#pragma once

// Exact integer and rational scalars.
//
// Everything downstream is exact: continued fractions, Seifert data,
// intersection forms, cyclotomic coefficients and rho values all live in
// Integer or Rational. gmpxx keeps rationals canonical (lowest terms,
// positive denominator) after every arithmetic operation; make_rational()
// is the only sanctioned way to build one from a raw numerator/denominator.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace brieskorn {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an internal invariant is found broken at runtime (as opposed
/// to a bad argument, which is std::invalid_argument).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rational make_rational(const Integer& num, const Integer& den);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Accepts "n" or "n/d" (optional sign on n).
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

/// Non-negative residue of x modulo m (m > 0).
std::int64_t mod(std::int64_t x, std::int64_t m);
Integer mod(const Integer& x, const Integer& m);

/// Residue in (-m/2, m/2].
std::int64_t centered_mod(std::int64_t x, std::int64_t m);

std::int64_t to_int64(const Integer& x);

bool is_prime(std::int64_t n);

/// floor(sqrt(x)) for x >= 0.
Integer isqrt(const Integer& x);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

}  // namespace brieskorn
