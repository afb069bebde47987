#pragma once

#include "brieskorn/arith.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace brieskorn {

/// Pairwise-coprime triple (a1 <= a2 <= a3), each >= 2, naming the
/// Brieskorn homology sphere Sigma(a1, a2, a3). Always stored sorted.
class BrieskornTriple {
 public:
  /// Sorts the entries; throws std::invalid_argument on entries < 2 or a
  /// common factor.
  BrieskornTriple(std::int64_t a, std::int64_t b, std::int64_t c);

  const std::array<std::int64_t, 3>& entries() const { return a_; }
  std::int64_t operator[](std::size_t i) const { return a_[i]; }
  Integer product() const;
  std::string to_string() const;

  friend bool operator==(const BrieskornTriple&, const BrieskornTriple&) = default;

 private:
  std::array<std::int64_t, 3> a_;
};

struct SeifertData {
  BrieskornTriple triple;
  std::array<std::int64_t, 3> b;  // -a_i < b_i < 0, same order as triple
  Rational delta;                 // central weight of the canonical resolution
  std::int64_t r_invariant;       // -2 delta - 3
};

/// Solves a1 a2 a3 b_i / a_i = 1 (mod a_i) for b_i in (-a_i, 0) by trying
/// every residue, and asserts the solution is unique.
SeifertData seifert_invariants(const BrieskornTriple& t);

/// Fintushel-Stern R = -2 delta - 3. Always odd and >= -1.
std::int64_t r_invariant(const BrieskornTriple& t);

/// R != -1 rules out a smooth contractible bounding 4-manifold.
inline bool r_invariant_obstructs_contractible(std::int64_t r) { return r != -1; }

enum class FamilyKind {
  casson_harer,   // (r, rs-1, rs+1) r even s odd; (r, rs+-1, rs+-2) r odd
  stern,          // (r, rs+-1, 2r(rs+-1)+rs-+1) r even s odd; (r, rs+-1, 2r(rs+-1)+rs+-2) r odd
  stern_shifted,  // (r, rs+-2, 2r(rs+-2)+rs+-1) r odd
};

FamilyKind parse_family_kind(std::string_view name);
std::string_view family_kind_name(FamilyKind kind);

/// Member of one of the families of Brieskorn spheres bounding contractible
/// manifolds. sign is +1 or -1 and selects the upper/lower sign in the
/// family formula (ignored for the even-r Casson-Harer row). Throws
/// std::invalid_argument for wrong parity or a degenerate/non-coprime result.
BrieskornTriple family(FamilyKind kind, std::int64_t r, std::int64_t s, int sign);

/// The circle subgroup Z/p acts freely iff gcd(p, a1 a2 a3) = 1.
bool standard_action_valid(const BrieskornTriple& t, std::int64_t p);

}  // namespace brieskorn
