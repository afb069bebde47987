#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_p), p prime.
//
// An element is stored as its canonical residue modulo the p-th cyclotomic
// polynomial 1 + x + ... + x^(p-1): a vector of p-1 rational coefficients
// on the basis 1, zeta, ..., zeta^(p-2). Two elements are equal iff their
// coefficient vectors are equal. The Galois group (Z/p)^* acts by
// zeta -> zeta^k, which permutes powers of zeta and is therefore cheap in
// the power basis.

#include "brieskorn/arith.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace brieskorn {

class CyclotomicNumber {
 public:
  /// Zero of Q(zeta_p). Throws std::invalid_argument unless p is prime.
  explicit CyclotomicNumber(int p);
  CyclotomicNumber(int p, const Rational& constant);

  /// Reduces an arbitrary-length coefficient vector on 1, zeta, zeta^2, ...
  static CyclotomicNumber from_power_coefficients(int p, const std::vector<Rational>& coeffs);
  /// zeta^k for any integer k.
  static CyclotomicNumber zeta_power(int p, std::int64_t k);

  int order() const { return p_; }
  /// Canonical coefficients on 1, zeta, ..., zeta^(p-2).
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  /// Image under zeta -> zeta^k; k must be coprime to p.
  CyclotomicNumber galois(std::int64_t k) const;
  CyclotomicNumber conjugate() const { return galois(-1); }

  /// Throws std::domain_error for zero.
  CyclotomicNumber inverse() const;

  /// Embedding with zeta = exp(2 pi i / p).
  std::complex<double> to_complex() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o) { return *this *= o.inverse(); }
  CyclotomicNumber& operator*=(const Rational& q);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& q) { return a *= q; }
  friend CyclotomicNumber operator*(const Rational& q, CyclotomicNumber a) { return a *= q; }
  friend CyclotomicNumber operator+(CyclotomicNumber a, const Rational& q) {
    return a += CyclotomicNumber(a.p_, q);
  }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const Rational& q) {
    return a -= CyclotomicNumber(a.p_, q);
  }
  friend CyclotomicNumber operator-(CyclotomicNumber a) { return a *= Rational(-1); }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

 private:
  CyclotomicNumber(int p, std::vector<Rational> canonical);
  void require_same_field(const CyclotomicNumber& o) const;

  int p_;
  std::vector<Rational> coeffs_;
};

/// True iff x is fixed by every automorphism zeta -> zeta^k, k = 1..p-1.
bool is_galois_invariant(const CyclotomicNumber& x);

/// The rational value of a Galois-invariant element. Throws
/// std::domain_error if some automorphism moves x.
Rational rational_value(const CyclotomicNumber& x);

/// Finite Laurent polynomial in t with rational coefficients.
struct LaurentPolynomial {
  std::map<std::int64_t, Rational> terms;  // exponent -> coefficient

  LaurentPolynomial& add(std::int64_t exponent, const Rational& coeff);
  /// Value at t = zeta_p^j.
  CyclotomicNumber evaluate(int p, std::int64_t j) const;
};

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// num(t)/den(t) at t = zeta_p^j. Throws std::domain_error when the
/// denominator vanishes there.
CyclotomicNumber evaluate_ratio(const LaurentPolynomial& num, const LaurentPolynomial& den,
                                int p, std::int64_t j);

}  // namespace brieskorn
