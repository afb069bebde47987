#include "brieskorn/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace brieskorn {

namespace {

int checked_order(int p) {
  if (!is_prime(p)) throw std::invalid_argument("cyclotomic order must be prime, got " + std::to_string(p));
  return p;
}

// Folds a length-p vector on 1..zeta^(p-1) onto the canonical basis using
// zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
std::vector<Rational> reduce_full(std::vector<Rational> full) {
  const std::size_t p = full.size();
  Rational top = full[p - 1];
  full.pop_back();
  if (top != 0) {
    for (auto& c : full) c -= top;
  }
  return full;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber(int p) : p_(checked_order(p)), coeffs_(p - 1, Rational(0)) {}

CyclotomicNumber::CyclotomicNumber(int p, const Rational& constant) : CyclotomicNumber(p) {
  coeffs_[0] = constant;
}

CyclotomicNumber::CyclotomicNumber(int p, std::vector<Rational> canonical)
    : p_(p), coeffs_(std::move(canonical)) {}

CyclotomicNumber CyclotomicNumber::from_power_coefficients(int p, const std::vector<Rational>& coeffs) {
  checked_order(p);
  std::vector<Rational> full(p, Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) full[i % p] += coeffs[i];
  return CyclotomicNumber(p, reduce_full(std::move(full)));
}

CyclotomicNumber CyclotomicNumber::zeta_power(int p, std::int64_t k) {
  checked_order(p);
  std::vector<Rational> full(p, Rational(0));
  full[mod(k, p)] = 1;
  return CyclotomicNumber(p, reduce_full(std::move(full)));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

void CyclotomicNumber::require_same_field(const CyclotomicNumber& o) const {
  if (o.p_ != p_) throw std::invalid_argument("cyclotomic fields of different order");
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  require_same_field(o);
  std::vector<Rational> full(p_, Rational(0));
  const std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.coeffs_[j] == 0) continue;
      full[(i + j) % p_] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = reduce_full(std::move(full));
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

CyclotomicNumber CyclotomicNumber::galois(std::int64_t k) const {
  if (std::gcd(mod(k, p_), static_cast<std::int64_t>(p_)) != 1)
    throw std::invalid_argument("galois: exponent not coprime to p");
  std::vector<Rational> full(p_, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    full[mod(static_cast<std::int64_t>(i) * k, p_)] += coeffs_[i];
  }
  return CyclotomicNumber(p_, reduce_full(std::move(full)));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta_p)");
  // x^-1 = (prod_{k=2}^{p-1} sigma_k x) / N(x), and N(x) is rational.
  CyclotomicNumber others(p_, Rational(1));
  for (int k = 2; k < p_; ++k) others *= galois(k);
  CyclotomicNumber norm = others * *this;
  const Rational n = rational_value(norm);
  return others * Rational(1 / n);
}

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> z(0.0, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / p_;
    z += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return z;
}

bool is_galois_invariant(const CyclotomicNumber& x) {
  for (int k = 2; k < x.order(); ++k)
    if (!(x.galois(k) == x)) return false;
  return true;
}

Rational rational_value(const CyclotomicNumber& x) {
  if (!is_galois_invariant(x)) throw std::domain_error("element of Q(zeta_p) is not rational");
  const auto& c = x.coefficients();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) throw InvariantViolation("Galois-invariant element with irrational coordinates");
  return c[0];
}

LaurentPolynomial& LaurentPolynomial::add(std::int64_t exponent, const Rational& coeff) {
  auto& slot = terms[exponent];
  slot += coeff;
  if (slot == 0) terms.erase(exponent);
  return *this;
}

CyclotomicNumber LaurentPolynomial::evaluate(int p, std::int64_t j) const {
  std::vector<Rational> full(p, Rational(0));
  for (const auto& [e, c] : terms) full[mod(mod(e, p) * mod(j, p), p)] += c;
  return CyclotomicNumber::from_power_coefficients(p, full);
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) out.add(ea + eb, ca * cb);
  return out;
}

CyclotomicNumber evaluate_ratio(const LaurentPolynomial& num, const LaurentPolynomial& den,
                                int p, std::int64_t j) {
  CyclotomicNumber d = den.evaluate(p, j);
  if (d.is_zero()) throw std::domain_error("rational function has a pole at this root of unity");
  return num.evaluate(p, j) / d;
}

}  // namespace brieskorn
