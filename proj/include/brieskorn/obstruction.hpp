#pragma once

// Sign-constraint system for smooth extension of a homologically trivial
// Z/p action over X = M(Gamma) u -W.
//
// Unknowns are one sign o_i per node sphere (standard vs complex
// orientation) and one sign s_j per diagonal basis vector (the standard
// basis is only known up to signs). Writing c_ji for the e_j-coefficient of
// [F_i]:
//   fixed sphere F_i:      o_i s_j c_ji in {0, 1} for all j
//   invariant sphere F_i:  o_i s_j c_ji >= 0 for all j
//   coupling:              (o_F [F]) . (o_S [S]) = -1 for a fixed S with
//                          [S]^2 = -1 and an invariant F with |[F].[S]| = 1
// Every nonzero c_ji therefore pins the product o_i s_j, and a coupling pins
// o_F o_S, so the system is a set of parity equations between pairs of
// signs. Unit propagation decides it completely; a conflict is an odd
// cycle of equations.

#include "brieskorn/lattice.hpp"
#include "brieskorn/matrix.hpp"
#include "brieskorn/plumbing.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace brieskorn {

enum class SphereKind { fixed, invariant };

enum class ConstraintSource {
  fixed_coefficient,      // fixed sphere, coefficient must become +1 (or 0)
  invariant_coefficient,  // invariant sphere, coefficient must become >= 0
  coupling,               // orientation coupling with a fixed (-1)-sphere
  fixed_magnitude,        // fixed sphere coefficient of size >= 2: unsatisfiable
};

std::string_view constraint_source_name(ConstraintSource s);

/// Variables are numbered o_0..o_{N-1} then s_0..s_{n-1}. The constraint
/// reads value(u) * value(v) == parity, except fixed_magnitude which is
/// never satisfiable.
struct SignConstraint {
  std::size_t u = 0;
  std::size_t v = 0;
  int parity = 1;
  ConstraintSource source = ConstraintSource::invariant_coefficient;
  std::size_t sphere = 0;      // node sphere the constraint comes from
  std::size_t index = 0;       // diagonal index, or the partner sphere for coupling
  Integer coefficient;         // c_ji, or [F].[S] for coupling
};

struct ConstraintSystem {
  std::size_t rank = 0;
  std::size_t spheres = 0;
  IntMatrix columns;               // C_inv: column i = [F_i] in the diagonal basis
  std::vector<SphereKind> kinds;
  std::vector<SignConstraint> constraints;

  std::size_t variable_count() const { return spheres + rank; }
  std::size_t orientation_var(std::size_t sphere) const { return sphere; }
  std::size_t basis_var(std::size_t j) const { return spheres + j; }
  std::string variable_name(std::size_t var) const;
  /// [F_a] . [F_b] = -(column a) . (column b).
  Integer intersection(std::size_t a, std::size_t b) const;
  bool satisfied_by(const std::vector<int>& assignment) const;
};

ConstraintSystem build_constraints(const EquivariantMarkup& markup, const Diagonalization& d);

/// The argument that rules out a fixed (-1)-sphere meeting two disjoint
/// invariant spheres: 0 = [F2].[F3] = -1 - sum_{i != pivot} a_i b_i, where
/// every a_i b_i must be >= 0 in a standard basis, yet some is negative.
struct InnerProductWitness {
  std::size_t fixed_sphere = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t pivot = 0;             // diagonal index carried by the fixed sphere
  std::size_t negative_index = 0;    // an index with a_k b_k < 0
  Integer off_pivot_sum;             // sum_{i != pivot} a_i b_i (always -1)
};

struct ObstructionCertificate {
  std::vector<SignConstraint> cycle;  // parity product -1, or one fixed_magnitude entry
  std::optional<InnerProductWitness> witness;
  std::string text;
};

enum class Feasibility { feasible, infeasible };

std::string_view feasibility_name(Feasibility f);

struct ObstructionVerdict {
  Feasibility status = Feasibility::feasible;
  std::optional<ObstructionCertificate> certificate;  // when infeasible
  std::vector<int> assignment;                        // when feasible, +-1 per variable
};

ObstructionVerdict decide(const ConstraintSystem& cs);

/// Tries every assignment; only for variable_count() <= 26. Used as the
/// independent check of decide().
Feasibility decide_exhaustive(const ConstraintSystem& cs);

/// Re-checks a certificate against the system: its constraints belong to
/// cs and no assignment satisfies all of them.
bool verify_certificate(const ConstraintSystem& cs, const ObstructionCertificate& cert);

/// Looks for the fixed (-1)-sphere / two invariant neighbours pattern.
std::optional<InnerProductWitness> find_inner_product_witness(const ConstraintSystem& cs);

/// The hypothesis under which infeasibility proves non-extendability.
std::string obstruction_hypothesis();

}  // namespace brieskorn
