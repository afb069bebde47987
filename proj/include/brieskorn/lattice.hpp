#pragma once

// Diagonalizing negative definite unimodular integer forms.
//
// A negative definite unimodular lattice is isomorphic to -I_n iff it has
// n orthogonal pairs of vectors of square -1; in that case those pairs are
// all of its norm -1 vectors. So the diagonalization is found by listing the
// norm -1 vectors exactly (Fincke-Pohst over an exact rational LDL^t of -Q)
// and checking there are exactly n pairs.

#include "brieskorn/arith.hpp"
#include "brieskorn/matrix.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace brieskorn {

class UnimodularForm {
 public:
  /// Throws std::invalid_argument unless q is square and symmetric.
  explicit UnimodularForm(IntMatrix q);

  std::size_t dimension() const { return q_.rows(); }
  const IntMatrix& matrix() const { return q_; }
  Integer det() const { return determinant(q_); }
  bool is_unimodular() const;
  /// Exact: all pivots of the LDL^t factorization of -Q are positive.
  bool is_negative_definite() const;

 private:
  IntMatrix q_;
};

/// All v with v^t Q v = -1, in canonical order: representatives with first
/// nonzero entry positive, sorted lexicographically, each followed by its
/// negation. Throws std::invalid_argument for a form that is not negative
/// definite.
std::vector<IntVector> enumerate_roots(const UnimodularForm& f);

/// Columns of c are the diagonal basis e_j in node coordinates; columns of
/// c_inv are the node classes F_i in the diagonal basis.
struct Diagonalization {
  IntMatrix c;
  IntMatrix c_inv;
};

struct DiagonalizationFailure {
  std::size_t root_pairs = 0;
  std::size_t required = 0;
  std::string certificate;
};

using DiagonalizationResult = std::variant<Diagonalization, DiagonalizationFailure>;

/// Requires a negative definite unimodular form (std::invalid_argument
/// otherwise). On success C^t Q C = -I and C * C_inv = I hold exactly.
DiagonalizationResult diagonalize(const UnimodularForm& f);

enum class Axis { rows, columns };

/// True iff A equals B after permuting and negating the slices along axis
/// (columns: A = B S; rows: A = S B) for some signed permutation S.
bool signed_permutation_equal(const IntMatrix& a, const IntMatrix& b, Axis axis = Axis::columns);

}  // namespace brieskorn
