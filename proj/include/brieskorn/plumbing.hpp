#pragma once

// Plumbing graphs: weighted trees of disk bundles over 2-spheres.
//
// Nodes are indexed 0..n-1. Graphs built here are star-shaped with the
// central node first and each branch listed outward from the center; the
// NodeTag records (branch, position) so callers can reorder to other
// conventions without re-deriving the structure.

#include "brieskorn/arith.hpp"
#include "brieskorn/matrix.hpp"
#include "brieskorn/seifert.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace brieskorn {

struct NodeTag {
  int branch = -1;    // -1 for the central node
  int position = 0;   // 1-based distance from the center along the branch
};

class PlumbingGraph {
 public:
  PlumbingGraph() = default;

  std::size_t add_node(Integer weight, NodeTag tag = {});
  void add_edge(std::size_t u, std::size_t v);

  std::size_t size() const { return weights_.size(); }
  const Integer& weight(std::size_t v) const { return weights_.at(v); }
  const NodeTag& tag(std::size_t v) const { return tags_.at(v); }
  const std::vector<Integer>& weights() const { return weights_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }

  std::optional<std::size_t> center() const { return center_; }
  void set_center(std::size_t v);

  bool is_tree() const;

  /// Nodes of branch b ordered outward from the center.
  std::vector<std::size_t> branch(int b) const;
  int branch_count() const;

 private:
  std::vector<Integer> weights_;
  std::vector<NodeTag> tags_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::optional<std::size_t> center_;
};

/// Star-shaped graph: center weight w, one branch per weight list.
PlumbingGraph star_graph(const Integer& center_weight, const std::vector<std::vector<Integer>>& branches);

/// Minimal negative definite resolution of Sigma(a1,a2,a3): center delta,
/// branch i = hj_expand(a_i, b_i), in sorted-triple order.
PlumbingGraph canonical_resolution(const SeifertData& sd);

/// Template graph for Sigma(3, 3s+1, 21s+8), s >= 2: center -1 with
/// branches [-3], [-4, -2 x (s-1)], [-3, -(s+1), -4, -2].
PlumbingGraph gamma_k_graph(std::int64_t s);

/// Indefinite plumbing bounding Sigma(r, rs+-1, 2r(rs+-1)+rs+-2), r odd:
/// center -1 (fixed by the circle action) with branches
/// [-2, (r-1)/2], [-r, +-s], [-2, (r-1)/2, -+s, -r, 2].
/// Throws std::invalid_argument if the result does not have signature -2
/// and unimodular form.
PlumbingGraph fickle_graph(std::int64_t r, std::int64_t s, int sign);

/// Diagonal = weights, off-diagonal 1 per edge.
IntMatrix intersection_matrix(const PlumbingGraph& g);

enum class Definiteness { negative_definite, indefinite, other };

struct SignatureResult {
  int signature = 0;
  int positive = 0;
  int negative = 0;
  int zero = 0;
  Definiteness definiteness = Definiteness::other;
};

std::string_view definiteness_name(Definiteness d);

/// Leaf-to-root rational elimination on the tree; falls back to general
/// symmetric elimination on the matrix if a zero pivot appears.
SignatureResult graph_signature(const PlumbingGraph& g);

/// Signature of any symmetric integer matrix by exact congruence
/// diagonalization over Q.
SignatureResult symmetric_signature(const IntMatrix& m);

/// Value of each branch read as a continued fraction from the center
/// outward. For a star-shaped graph the boundary is Seifert fibered with
/// multiplicities |numerator| of these fractions.
std::vector<Rational> branch_fractions(const PlumbingGraph& g);

/// True iff the weighted trees are isomorphic (weights must match).
bool isomorphic(const PlumbingGraph& a, const PlumbingGraph& b);

/// Graphviz dot, one record per line.
void write_dot(std::ostream& out, const PlumbingGraph& g, const std::string& name = "plumbing");

// ---------------------------------------------------------------------------
// Equivariant markup.

/// Rotation numbers (a, b) mod p at an isolated fixed point, stored as
/// residues in (-p/2, p/2].
struct RotationPair {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const RotationPair&, const RotationPair&) = default;
  friend auto operator<=>(const RotationPair&, const RotationPair&) = default;
};

RotationPair make_rotation_pair(const Integer& a, const Integer& b, std::int64_t p);

/// Representative of the class {(a,b), (b,a), (-a,-b), (-b,-a)}: sorted
/// ascending, with the larger coordinate sum among the two sign choices.
RotationPair canonical_rotation_class(const RotationPair& r, std::int64_t p);

struct NodeAction {
  Integer base_weight;   // circle weight on the base sphere at the pole facing the parent
  Integer fiber_weight;  // circle weight on the fiber there
  bool fixed = false;    // base weight = 0 mod p
  std::int64_t normal_rotation = 0;  // c_F mod p, centered; set only when fixed
};

struct IsolatedPoint {
  RotationPair rotation;
  Integer base_weight;
  Integer fiber_weight;
  std::vector<std::size_t> nodes;  // spheres through the point (1 or 2)
};

struct EquivariantMarkup {
  std::int64_t p = 0;
  std::vector<NodeAction> nodes;
  std::vector<IsolatedPoint> points;

  std::vector<std::size_t> fixed_spheres() const;
  bool is_fixed(std::size_t v) const { return nodes.at(v).fixed; }
  /// points + 2 * fixed spheres == 1 + nodes.
  bool lefschetz_consistent() const;
};

/// Initial circle weights: (base, fiber) on the seed node. The seed node
/// must be fixed by the circle action (base 0) when it has more than two
/// neighbors.
struct RotationSeed {
  std::size_t node = 0;
  Integer base_weight = 0;
  Integer fiber_weight = 1;
};

/// Seeds the center of a star-shaped graph with (base 0, fiber 1).
RotationSeed default_seed(const PlumbingGraph& g);

/// Extends the circle action over the plumbing and restricts it to Z/p.
/// Along a node of Euler number k the pole weights go (a, b) -> (-a, b - k a);
/// crossing a plumbing point swaps base and fiber. Throws
/// InvariantViolation if a zero rotation pair appears (the boundary action
/// would not be free) or the Lefschetz count fails, and
/// std::invalid_argument for a non-fixed node with more than two neighbors.
EquivariantMarkup propagate_rotations(const PlumbingGraph& g, std::int64_t p, const RotationSeed& seed);

}  // namespace brieskorn
