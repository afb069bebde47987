#include "brieskorn/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace brieskorn {

BrieskornTriple::BrieskornTriple(std::int64_t a, std::int64_t b, std::int64_t c) : a_{a, b, c} {
  std::sort(a_.begin(), a_.end());
  if (a_[0] < 2) throw std::invalid_argument("Brieskorn triple entries must be >= 2: " + to_string());
  if (std::gcd(a_[0], a_[1]) != 1 || std::gcd(a_[0], a_[2]) != 1 || std::gcd(a_[1], a_[2]) != 1)
    throw std::invalid_argument("Brieskorn triple entries must be pairwise coprime: " + to_string());
}

Integer BrieskornTriple::product() const {
  return Integer(a_[0]) * Integer(a_[1]) * Integer(a_[2]);
}

std::string BrieskornTriple::to_string() const {
  return "(" + std::to_string(a_[0]) + "," + std::to_string(a_[1]) + "," + std::to_string(a_[2]) + ")";
}

SeifertData seifert_invariants(const BrieskornTriple& t) {
  const Integer product = t.product();
  SeifertData out{t, {}, Rational(0), 0};
  Rational delta = make_rational(-1, product);
  for (std::size_t i = 0; i < 3; ++i) {
    const std::int64_t a = t[i];
    const Integer cofactor = product / a;
    std::optional<std::int64_t> found;
    for (std::int64_t b = -a + 1; b < 0; ++b) {
      if (mod(cofactor * b, Integer(a)) == 1 % a) {
        if (found) throw InvariantViolation("Seifert invariant not unique for " + t.to_string());
        found = b;
      }
    }
    if (!found) throw InvariantViolation("no Seifert invariant for " + t.to_string());
    out.b[i] = *found;
    delta += make_rational(*found, a);
  }
  if (!is_integer(delta) || delta > -1)
    throw InvariantViolation("central weight is not an integer <= -1 for " + t.to_string());
  out.delta = delta;
  out.r_invariant = to_int64(-2 * delta.get_num() - 3);
  return out;
}

std::int64_t r_invariant(const BrieskornTriple& t) { return seifert_invariants(t).r_invariant; }

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "casson-harer") return FamilyKind::casson_harer;
  if (name == "stern") return FamilyKind::stern;
  if (name == "stern-shifted") return FamilyKind::stern_shifted;
  throw std::invalid_argument("unknown family kind: " + std::string(name));
}

std::string_view family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::casson_harer: return "casson-harer";
    case FamilyKind::stern: return "stern";
    case FamilyKind::stern_shifted: return "stern-shifted";
  }
  return "?";
}

BrieskornTriple family(FamilyKind kind, std::int64_t r, std::int64_t s, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("family sign must be +1 or -1");
  const bool r_even = r % 2 == 0;
  const bool s_odd = s % 2 != 0;
  const std::int64_t e = sign;
  switch (kind) {
    case FamilyKind::casson_harer:
      if (r_even) {
        if (!s_odd) throw std::invalid_argument("Casson-Harer family with r even needs s odd");
        return BrieskornTriple(r, r * s - 1, r * s + 1);
      }
      return BrieskornTriple(r, r * s + e, r * s + 2 * e);
    case FamilyKind::stern:
      if (r_even) {
        if (!s_odd) throw std::invalid_argument("Stern family with r even needs s odd");
        return BrieskornTriple(r, r * s + e, 2 * r * (r * s + e) + r * s - e);
      }
      return BrieskornTriple(r, r * s + e, 2 * r * (r * s + e) + r * s + 2 * e);
    case FamilyKind::stern_shifted:
      if (r_even) throw std::invalid_argument("shifted Stern family needs r odd");
      return BrieskornTriple(r, r * s + 2 * e, 2 * r * (r * s + 2 * e) + r * s + e);
  }
  throw std::invalid_argument("unknown family kind");
}

bool standard_action_valid(const BrieskornTriple& t, std::int64_t p) {
  if (p < 2) return false;
  return gcd(t.product(), Integer(p)) == 1;
}

}  // namespace brieskorn
