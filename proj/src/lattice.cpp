#include "brieskorn/lattice.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace brieskorn {

UnimodularForm::UnimodularForm(IntMatrix q) : q_(std::move(q)) {
  if (!q_.is_square() || q_.rows() == 0) throw std::invalid_argument("form matrix must be square and non-empty");
  if (!q_.is_symmetric()) throw std::invalid_argument("form matrix must be symmetric");
}

bool UnimodularForm::is_unimodular() const { return abs(det()) == 1; }

namespace {

// Upper-triangular quadratic form: x^t A x = sum_i q(i,i) (x_i + sum_{j>i} q(i,j) x_j)^2.
// Returns nothing if A is not positive definite.
std::optional<Matrix<Rational>> quadratic_decomposition(const IntMatrix& a_int) {
  const std::size_t n = a_int.rows();
  Matrix<Rational> q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = a_int(i, j);
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) <= 0) return std::nullopt;
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  return q;
}

class RootSearch {
 public:
  explicit RootSearch(Matrix<Rational> q) : q_(std::move(q)), n_(q_.rows()), x_(n_, Integer(0)) {}

  std::vector<IntVector> run() {
    descend(n_, Rational(1));
    return std::move(found_);
  }

 private:
  // Coordinates i..n-1 are set; budget is 1 minus their contribution.
  void descend(std::size_t level, const Rational& budget) {
    if (level == 0) {
      if (budget == 0) found_.push_back(x_);
      return;
    }
    const std::size_t i = level - 1;
    Rational center = 0;
    for (std::size_t j = i + 1; j < n_; ++j)
      if (x_[j] != 0) center += q_(i, j) * x_[j];
    // (x_i + center)^2 <= budget / q_ii, and |x_i + center| < isqrt(floor) + 1.
    const Rational bound = budget / q_(i, i);
    const Integer radius = isqrt(floor(bound)) + 1;
    const Integer lo = ceil(-center - radius);
    const Integer hi = floor(-center + radius);
    for (Integer v = lo; v <= hi; ++v) {
      Rational shifted = center + v;
      Rational used = q_(i, i) * shifted * shifted;
      if (used > budget) continue;
      x_[i] = v;
      descend(i, budget - used);
    }
    x_[i] = 0;
  }

  Matrix<Rational> q_;
  std::size_t n_;
  IntVector x_;
  std::vector<IntVector> found_;
};

bool first_nonzero_positive(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return x > 0;
  return false;
}

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

bool UnimodularForm::is_negative_definite() const {
  return quadratic_decomposition(-q_).has_value();
}

std::vector<IntVector> enumerate_roots(const UnimodularForm& f) {
  auto q = quadratic_decomposition(-f.matrix());
  if (!q) throw std::invalid_argument("enumerate_roots needs a negative definite form");
  auto all = RootSearch(std::move(*q)).run();

  std::vector<IntVector> reps;
  for (auto& v : all)
    if (first_nonzero_positive(v)) reps.push_back(std::move(v));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  if (2 * reps.size() != all.size())
    throw InvariantViolation("root list is not closed under negation");

  std::vector<IntVector> out;
  out.reserve(2 * reps.size());
  for (auto& v : reps) {
    out.push_back(v);
    out.push_back(negated(v));
  }
  return out;
}

DiagonalizationResult diagonalize(const UnimodularForm& f) {
  if (!f.is_negative_definite()) throw std::invalid_argument("diagonalize needs a negative definite form");
  if (!f.is_unimodular()) throw std::invalid_argument("diagonalize needs a unimodular form");
  const std::size_t n = f.dimension();
  const auto roots = enumerate_roots(f);
  const std::size_t pairs = roots.size() / 2;
  if (pairs != n) {
    return DiagonalizationFailure{
        pairs, n, std::to_string(pairs) + " roots < " + std::to_string(n) + " required (roots counted up to sign)"};
  }

  const IntMatrix& q = f.matrix();
  IntMatrix c(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& v = roots[2 * j];
    for (std::size_t i = 0; i < n; ++i) c(i, j) = v[i];
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (bilinear(q, roots[2 * a], roots[2 * b]) != 0)
        throw InvariantViolation("norm -1 vectors of a unimodular form are not pairwise orthogonal");

  // C^t Q C = -I  =>  C^-1 = -C^t Q.
  IntMatrix c_inv = -(c.transpose() * q);
  const IntMatrix id = IntMatrix::identity(n);
  if (!(c * c_inv == id)) throw InvariantViolation("C * C_inv != I");
  if (!(c.transpose() * q * c == -id)) throw InvariantViolation("C^t Q C != -I");
  return Diagonalization{std::move(c), std::move(c_inv)};
}

bool signed_permutation_equal(const IntMatrix& a, const IntMatrix& b, Axis axis) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  auto slices = [axis](const IntMatrix& m) {
    std::vector<IntVector> out;
    const std::size_t count = axis == Axis::columns ? m.cols() : m.rows();
    for (std::size_t k = 0; k < count; ++k) {
      IntVector s = axis == Axis::columns ? m.column(k) : m.row(k);
      if (!first_nonzero_positive(s)) s = negated(std::move(s));
      out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return slices(a) == slices(b);
}

}  // namespace brieskorn
