#include "brieskorn/plumbing.hpp"

#include "brieskorn/continued_fraction.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace brieskorn {

std::size_t PlumbingGraph::add_node(Integer weight, NodeTag tag) {
  weights_.push_back(std::move(weight));
  tags_.push_back(tag);
  adjacency_.emplace_back();
  return weights_.size() - 1;
}

void PlumbingGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size() || u == v) throw std::invalid_argument("bad plumbing edge");
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
}

void PlumbingGraph::set_center(std::size_t v) {
  if (v >= size()) throw std::invalid_argument("center node out of range");
  center_ = v;
}

bool PlumbingGraph::is_tree() const {
  if (size() == 0) return false;
  if (edges_.size() + 1 != size()) return false;
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == size();
}

std::vector<std::size_t> PlumbingGraph::branch(int b) const {
  std::vector<std::size_t> nodes;
  for (std::size_t v = 0; v < size(); ++v)
    if (tags_[v].branch == b) nodes.push_back(v);
  std::sort(nodes.begin(), nodes.end(),
            [&](auto x, auto y) { return tags_[x].position < tags_[y].position; });
  return nodes;
}

int PlumbingGraph::branch_count() const {
  int count = 0;
  for (const auto& t : tags_) count = std::max(count, t.branch + 1);
  return count;
}

PlumbingGraph star_graph(const Integer& center_weight, const std::vector<std::vector<Integer>>& branches) {
  PlumbingGraph g;
  auto c = g.add_node(center_weight, {-1, 0});
  g.set_center(c);
  for (std::size_t b = 0; b < branches.size(); ++b) {
    std::size_t prev = c;
    for (std::size_t i = 0; i < branches[b].size(); ++i) {
      auto v = g.add_node(branches[b][i], {static_cast<int>(b), static_cast<int>(i + 1)});
      g.add_edge(prev, v);
      prev = v;
    }
  }
  return g;
}

PlumbingGraph canonical_resolution(const SeifertData& sd) {
  std::vector<std::vector<Integer>> branches;
  for (std::size_t i = 0; i < 3; ++i)
    branches.push_back(hj_expand(Integer(sd.triple[i]), Integer(sd.b[i])).terms);
  return star_graph(sd.delta.get_num(), branches);
}

PlumbingGraph gamma_k_graph(std::int64_t s) {
  if (s < 2) throw std::invalid_argument("gamma_k_graph needs s >= 2");
  std::vector<Integer> chain{Integer(-4)};
  for (std::int64_t i = 0; i < s - 1; ++i) chain.emplace_back(-2);
  return star_graph(Integer(-1), {{Integer(-3)}, chain, {Integer(-3), Integer(-(s + 1)), Integer(-4), Integer(-2)}});
}

PlumbingGraph fickle_graph(std::int64_t r, std::int64_t s, int sign) {
  if (r < 3 || r % 2 == 0) throw std::invalid_argument("fickle_graph needs odd r >= 3");
  if (s < 1) throw std::invalid_argument("fickle_graph needs s >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("fickle_graph sign must be +1 or -1");
  // Rejects parameters whose boundary is not a Brieskorn sphere.
  (void)family(FamilyKind::stern, r, s, sign);
  const Integer half((r - 1) / 2);
  PlumbingGraph g = star_graph(Integer(-1), {
      {Integer(-2), half},
      {Integer(-r), Integer(sign * s)},
      {Integer(-2), half, Integer(-sign * s), Integer(-r), Integer(2)},
  });
  auto sig = graph_signature(g);
  if (sig.signature != -2 || abs(determinant(intersection_matrix(g))) != 1)
    throw std::invalid_argument("fickle_graph parameters fail signature/unimodularity validation");
  return g;
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
  IntMatrix m(g.size(), g.size());
  for (std::size_t v = 0; v < g.size(); ++v) m(v, v) = g.weight(v);
  for (auto [u, v] : g.edges()) {
    m(u, v) += 1;
    m(v, u) += 1;
  }
  return m;
}

std::string_view definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::negative_definite: return "negative-definite";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::other: return "other";
  }
  return "?";
}

namespace {

SignatureResult tally(const std::vector<int>& pivot_signs, int zeros) {
  SignatureResult r;
  for (int s : pivot_signs) (s > 0 ? r.positive : r.negative) += 1;
  r.zero = zeros;
  r.signature = r.positive - r.negative;
  if (r.positive > 0 && r.negative > 0)
    r.definiteness = Definiteness::indefinite;
  else if (r.positive == 0 && r.zero == 0 && r.negative > 0)
    r.definiteness = Definiteness::negative_definite;
  else
    r.definiteness = Definiteness::other;
  return r;
}

}  // namespace

SignatureResult symmetric_signature(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("signature of non-symmetric matrix");
  const std::size_t n = m.rows();
  Matrix<Rational> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);

  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };

  std::vector<int> signs;
  int zeros = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv) == 0) ++piv;
    if (piv == n) {
      // Zero diagonal: fold an off-diagonal entry onto the diagonal.
      std::optional<std::pair<std::size_t, std::size_t>> hit;
      for (std::size_t i = k; i < n && !hit; ++i)
        for (std::size_t j = i + 1; j < n && !hit; ++j)
          if (a(i, j) != 0) hit = std::make_pair(i, j);
      if (!hit) {
        zeros += static_cast<int>(n - k);
        break;
      }
      auto [i, j] = *hit;
      for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
      piv = i;
    }
    swap_index(k, piv);
    const Rational pivot = a(k, k);
    signs.push_back(sgn(pivot));
    // Schur complement; row k stays untouched until the end.
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      Rational f = a(r, k) / pivot;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
    }
    for (std::size_t r = k + 1; r < n; ++r) a(r, k) = a(k, r) = 0;
  }
  return tally(signs, zeros);
}

SignatureResult graph_signature(const PlumbingGraph& g) {
  if (!g.is_tree()) return symmetric_signature(intersection_matrix(g));
  const std::size_t root = g.center().value_or(0);
  std::vector<std::size_t> order;
  std::vector<std::size_t> parent(g.size(), g.size());
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<Rational> pivot(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) pivot[v] = g.weight(v);
  std::vector<int> signs;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = *it;
    if (pivot[v] == 0) return symmetric_signature(intersection_matrix(g));
    signs.push_back(sgn(pivot[v]));
    if (parent[v] != g.size()) pivot[parent[v]] -= 1 / pivot[v];
  }
  return tally(signs, 0);
}

std::vector<Rational> branch_fractions(const PlumbingGraph& g) {
  std::vector<Rational> out;
  for (int b = 0; b < g.branch_count(); ++b) {
    std::vector<Integer> terms;
    for (auto v : g.branch(b)) terms.push_back(g.weight(v));
    out.push_back(continued_fraction_value(terms));
  }
  return out;
}

namespace {

std::string rooted_code(const PlumbingGraph& g, std::size_t v, std::size_t parent) {
  std::vector<std::string> children;
  for (auto w : g.neighbors(v))
    if (w != parent) children.push_back(rooted_code(g, w, v));
  std::sort(children.begin(), children.end());
  std::string code = "(" + g.weight(v).get_str();
  for (const auto& c : children) code += c;
  return code + ")";
}

std::string tree_code(const PlumbingGraph& g) {
  // Centers of the tree by repeated leaf stripping.
  const std::size_t n = g.size();
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = g.neighbors(v).size();
    if (degree[v] <= 1) leaves.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    std::vector<std::size_t> next;
    for (auto v : leaves) {
      --remaining;
      for (auto w : g.neighbors(v))
        if (--degree[w] == 1) next.push_back(w);
    }
    leaves = std::move(next);
  }
  std::string best;
  for (auto c : leaves) {
    auto code = rooted_code(g, c, n);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

bool isomorphic(const PlumbingGraph& a, const PlumbingGraph& b) {
  if (a.size() != b.size() || !a.is_tree() || !b.is_tree()) return false;
  return tree_code(a) == tree_code(b);
}

void write_dot(std::ostream& out, const PlumbingGraph& g, const std::string& name) {
  out << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    out << "  n" << v << " [label=\"" << g.weight(v).get_str() << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
}

// ---------------------------------------------------------------------------

RotationPair make_rotation_pair(const Integer& a, const Integer& b, std::int64_t p) {
  const Integer pp(p);
  return {centered_mod(to_int64(mod(a, pp)), p), centered_mod(to_int64(mod(b, pp)), p)};
}

RotationPair canonical_rotation_class(const RotationPair& r, std::int64_t p) {
  auto sorted = [](std::int64_t x, std::int64_t y) {
    return x <= y ? RotationPair{x, y} : RotationPair{y, x};
  };
  RotationPair plus = sorted(centered_mod(r.a, p), centered_mod(r.b, p));
  RotationPair minus = sorted(centered_mod(-r.a, p), centered_mod(-r.b, p));
  const auto sp = plus.a + plus.b;
  const auto sm = minus.a + minus.b;
  if (sp != sm) return sp > sm ? plus : minus;
  return std::min(plus, minus);
}

std::vector<std::size_t> EquivariantMarkup::fixed_spheres() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nodes.size(); ++v)
    if (nodes[v].fixed) out.push_back(v);
  return out;
}

bool EquivariantMarkup::lefschetz_consistent() const {
  return points.size() + 2 * fixed_spheres().size() == 1 + nodes.size();
}

RotationSeed default_seed(const PlumbingGraph& g) {
  if (!g.center()) throw std::invalid_argument("default rotation seed needs a central node");
  return RotationSeed{*g.center(), Integer(0), Integer(1)};
}

EquivariantMarkup propagate_rotations(const PlumbingGraph& g, std::int64_t p, const RotationSeed& seed) {
  if (!is_prime(p)) throw std::invalid_argument("propagate_rotations needs prime p");
  if (!g.is_tree()) throw std::invalid_argument("propagate_rotations needs a tree");
  if (seed.node >= g.size()) throw std::invalid_argument("rotation seed node out of range");
  const std::size_t n = g.size();
  const Integer pp(p);

  EquivariantMarkup m;
  m.p = p;
  m.nodes.resize(n);
  std::vector<std::size_t> parent(n, n);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{seed.node};
  seen[seed.node] = true;
  m.nodes[seed.node].base_weight = seed.base_weight;
  m.nodes[seed.node].fiber_weight = seed.fiber_weight;

  auto is_zero_mod_p = [&](const Integer& x) { return mod(x, pp) == 0; };

  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    const Integer alpha = m.nodes[v].base_weight;
    const Integer beta = m.nodes[v].fiber_weight;
    const Integer& k = g.weight(v);

    std::vector<std::size_t> children;
    for (auto w : g.neighbors(v))
      if (!seen[w]) children.push_back(w);

    std::vector<std::pair<Integer, Integer>> child_weights;
    if (alpha == 0) {
      // Circle-fixed sphere: every plumbing point sees fiber weight beta.
      for (std::size_t i = 0; i < children.size(); ++i) child_weights.emplace_back(beta, Integer(0));
    } else {
      const bool has_parent = parent[v] != n;
      const std::size_t free_poles = has_parent ? 1 : 2;
      if (children.size() > free_poles)
        throw std::invalid_argument("node " + std::to_string(v) +
                                    " is not circle-fixed but has more than two plumbing points");
      if (!children.empty()) child_weights.emplace_back(beta - k * alpha, -alpha);  // south pole
      if (children.size() == 2) child_weights.emplace_back(beta, alpha);            // north pole
    }
    for (std::size_t i = 0; i < children.size(); ++i) {
      const auto w = children[i];
      seen[w] = true;
      parent[w] = v;
      m.nodes[w].base_weight = child_weights[i].first;
      m.nodes[w].fiber_weight = child_weights[i].second;
      queue.push_back(w);
    }
  }

  for (std::size_t v = 0; v < n; ++v) {
    auto& node = m.nodes[v];
    node.fixed = is_zero_mod_p(node.base_weight);
    if (node.fixed) {
      node.normal_rotation = centered_mod(to_int64(mod(node.fiber_weight, pp)), p);
      if (node.normal_rotation == 0)
        throw InvariantViolation("fixed sphere " + std::to_string(v) + " has trivial normal rotation");
    }
  }

  auto add_point = [&](const Integer& a, const Integer& b, std::vector<std::size_t> on) {
    if (is_zero_mod_p(a) || is_zero_mod_p(b))
      throw InvariantViolation("isolated fixed point with a zero rotation number; the boundary action is not free");
    m.points.push_back({make_rotation_pair(a, b, p), a, b, std::move(on)});
  };

  for (std::size_t v = 0; v < n; ++v) {
    const auto& node = m.nodes[v];
    if (node.base_weight == 0) continue;  // circle-fixed: no poles
    const bool has_parent = parent[v] != n;
    std::size_t children = 0;
    for (auto w : g.neighbors(v))
      if (parent[w] == v) ++children;
    // North pole: shared with the parent, or free on a root.
    if (has_parent) {
      if (!node.fixed && !m.nodes[parent[v]].fixed)
        add_point(node.base_weight, node.fiber_weight, {parent[v], v});
    } else if (children < 2 && !node.fixed) {
      add_point(node.base_weight, node.fiber_weight, {v});
    }
    // South pole: free end of a chain.
    if (children == 0 && !node.fixed)
      add_point(-node.base_weight, node.fiber_weight - g.weight(v) * node.base_weight, {v});
  }

  if (!m.lefschetz_consistent())
    throw InvariantViolation("fixed-set Euler characteristic does not match the plumbing");
  return m;
}

}  // namespace brieskorn
