#include "brieskorn/continued_fraction.hpp"
#include "brieskorn/plumbing.hpp"
#include "support/oracles.hpp"
#include "support/reference_data.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace brieskorn;

namespace {

PlumbingGraph resolution(std::int64_t a, std::int64_t b, std::int64_t c) {
  return canonical_resolution(seifert_invariants(BrieskornTriple(a, b, c)));
}

std::vector<long> weights_of(const PlumbingGraph& g, const std::vector<std::size_t>& nodes) {
  std::vector<long> out;
  for (auto v : nodes) out.push_back(g.weight(v).get_si());
  return out;
}

PlumbingGraph random_tree(oracle::Gen& g, long lo, long hi) {
  PlumbingGraph t;
  const auto n = g.uniform(1, 9);
  for (int i = 0; i < n; ++i) {
    t.add_node(Integer(g.uniform(lo, hi)));
    if (i > 0) t.add_edge(static_cast<std::size_t>(g.uniform(0, i - 1)), static_cast<std::size_t>(i));
  }
  return t;
}

std::vector<std::pair<std::int64_t, std::int64_t>> classes(const EquivariantMarkup& m) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& pt : m.points) {
    const auto c = canonical_rotation_class(pt.rotation, m.p);
    out.emplace_back(c.a, c.b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> classes(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                                                           std::int64_t p) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (auto [a, b] : pairs) {
    const auto c = canonical_rotation_class(make_rotation_pair(a, b, p), p);
    out.emplace_back(c.a, c.b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("canonical resolution of Sigma(3,16,113) has the reference branches") {
  const auto g = resolution(3, 16, 113);
  CHECK(g.size() == 11);
  CHECK(g.is_tree());
  REQUIRE(g.center());
  CHECK(g.weight(*g.center()) == -1);
  CHECK(g.branch_count() == 3);
  CHECK(weights_of(g, g.branch(0)) == std::vector<long>{-3});
  CHECK(weights_of(g, g.branch(1)) == std::vector<long>{-4, -2, -2, -2, -2});
  CHECK(weights_of(g, g.branch(2)) == std::vector<long>{-3, -6, -4, -2});
}

TEST_CASE("small canonical resolutions") {
  const auto e8 = resolution(2, 3, 5);
  CHECK(e8.size() == 8);
  CHECK(e8.weight(*e8.center()) == -2);
  CHECK(weights_of(e8, e8.branch(0)) == std::vector<long>{-2});
  CHECK(weights_of(e8, e8.branch(1)) == std::vector<long>{-2, -2});
  CHECK(weights_of(e8, e8.branch(2)) == std::vector<long>{-2, -2, -2, -2});
  const auto q = intersection_matrix(e8);
  CHECK(determinant(q) == 1);
  const auto sig = graph_signature(e8);
  CHECK(sig.signature == -8);
  CHECK(sig.definiteness == Definiteness::negative_definite);

  const auto g237 = resolution(2, 3, 7);
  CHECK(g237.weight(*g237.center()) == -1);
  CHECK(weights_of(g237, g237.branch(0)) == std::vector<long>{-2});
  CHECK(weights_of(g237, g237.branch(1)) == std::vector<long>{-3});
  CHECK(weights_of(g237, g237.branch(2)) == std::vector<long>{-7});
}

TEST_CASE("intersection matrix equals the printed Q_X after reordering") {
  const auto q = intersection_matrix(resolution(3, 16, 113));
  CHECK(q.permuted(refdata::printed_to_star_order(4)) == refdata::qx_corrected());
  CHECK(abs(determinant(q)) == 1);

  // The printed matrix is off by one misplaced edge; the printed C^-1 fixes it.
  const auto cinv = refdata::cinv_printed();
  const IntMatrix from_cinv = -(cinv.transpose() * cinv);
  CHECK(from_cinv == refdata::qx_corrected());
  int differing = 0;
  for (std::size_t i = 0; i < 11; ++i)
    for (std::size_t j = 0; j < 11; ++j) differing += from_cinv(i, j) != refdata::qx_printed()(i, j);
  CHECK(differing == 4);
  CHECK(refdata::qx_printed()(5, 6) == 1);
  CHECK(from_cinv(6, 7) == 1);

  PlumbingGraph one;
  one.add_node(Integer(-7));
  CHECK(intersection_matrix(one) == IntMatrix{{-7}});
}

TEST_CASE("Gamma_k template") {
  CHECK(gamma_k_graph(2).size() == 8);
  CHECK_THROWS_AS(gamma_k_graph(1), std::invalid_argument);
  CHECK(isomorphic(gamma_k_graph(5), resolution(3, 16, 113)));
  CHECK(isomorphic(gamma_k_graph(3), resolution(3, 10, 71)));
  for (std::int64_t s = 2; s <= 8; ++s) {
    const auto g = gamma_k_graph(s);
    CHECK(g.size() == static_cast<std::size_t>(6 + s));
    CHECK(isomorphic(g, resolution(3, 3 * s + 1, 21 * s + 8)));
    CHECK(intersection_matrix(g).permuted(refdata::printed_to_star_order(s - 1)) == refdata::gamma_q_printed_order(s));
  }
  CHECK_FALSE(isomorphic(gamma_k_graph(4), resolution(3, 16, 113)));
}

TEST_CASE("signatures") {
  const auto sig = graph_signature(resolution(3, 16, 113));
  CHECK(sig.signature == -11);
  CHECK(sig.definiteness == Definiteness::negative_definite);

  PlumbingGraph one;
  one.add_node(Integer(-1));
  CHECK(graph_signature(one).signature == -1);
  CHECK(graph_signature(one).definiteness == Definiteness::negative_definite);

  const auto f = fickle_graph(3, 5, 1);
  CHECK(graph_signature(f).signature == -2);
  CHECK(graph_signature(f).definiteness == Definiteness::indefinite);
}

TEST_CASE("property: tree signature agrees with the characteristic-polynomial oracle") {
  oracle::Gen g(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = random_tree(g, -4, 3);
    const auto q = intersection_matrix(t);
    const auto ref = oracle::inertia_reference(q);
    const auto sig = graph_signature(t);
    CHECK(sig.positive == ref.positive);
    CHECK(sig.negative == ref.negative);
    CHECK(sig.zero == ref.zero);
    const auto full = symmetric_signature(q);
    CHECK(full.signature == ref.positive - ref.negative);
  }
}

TEST_CASE("property: canonical resolutions are unimodular, negative definite, centered on delta") {
  oracle::Gen g(32);
  for (int trial = 0; trial < 60; ++trial) {
    const auto [a, b, c] = g.coprime_triple(120);
    const BrieskornTriple t(a, b, c);
    const auto sd = seifert_invariants(t);
    const auto gr = canonical_resolution(sd);
    CHECK(gr.is_tree());
    CHECK(gr.weight(*gr.center()) == sd.delta.get_num());
    for (int i = 0; i < 3; ++i) {
      std::vector<long> expected;
      for (const auto& w : hj_expand(t[i], sd.b[i]).terms) expected.push_back(w.get_si());
      CHECK(weights_of(gr, gr.branch(i)) == expected);
    }
    const auto q = intersection_matrix(gr);
    CHECK(abs(oracle::determinant_reference(q)) == 1);
    CHECK(graph_signature(gr).definiteness == Definiteness::negative_definite);
    const auto fr = branch_fractions(gr);
    for (int i = 0; i < 3; ++i) CHECK(abs(fr[i].get_num()) == t[i]);
  }
}

TEST_CASE("indefinite Stern-family plumbing") {
  const auto f = fickle_graph(3, 5, 1);
  CHECK(f.size() == 10);
  CHECK(abs(oracle::determinant_reference(intersection_matrix(f))) == 1);
  CHECK(graph_signature(fickle_graph(5, 1, 1)).signature == -2);
  CHECK(graph_signature(fickle_graph(3, 7, -1)).signature == -2);
  CHECK_THROWS_AS(fickle_graph(4, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(fickle_graph(3, 0, 1), std::invalid_argument);

  // Its boundary has the Seifert multiplicities of the family member.
  auto fr = branch_fractions(f);
  std::vector<Integer> mult;
  for (const auto& x : fr) mult.push_back(abs(x.get_num()));
  std::sort(mult.begin(), mult.end());
  CHECK(mult == std::vector<Integer>{3, 16, 113});
}

TEST_CASE("rotation data of Sigma(3,16,113) with Z/5") {
  const auto g = resolution(3, 16, 113);
  const auto m = propagate_rotations(g, 5, default_seed(g));
  CHECK(m.lefschetz_consistent());
  CHECK(classes(m) == classes({{1, 1}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {2, 2}}, 5));

  std::vector<std::pair<int, int>> spheres;
  for (auto v : m.fixed_spheres())
    spheres.emplace_back(g.weight(v).get_si(), static_cast<int>(mod(m.nodes[v].normal_rotation, 5)));
  std::sort(spheres.begin(), spheres.end());
  auto expected = refdata::sigma_3_16_113_spheres();
  std::sort(expected.begin(), expected.end());
  CHECK(spheres == expected);
  CHECK(m.is_fixed(*g.center()));
}

TEST_CASE("rotation data of the indefinite plumbing matches the printed list") {
  struct Case {
    std::int64_t r;
    int p;
    std::int64_t k;
  };
  for (auto [r, p, k] : {Case{3, 5, 1}, Case{3, 7, 1}, Case{5, 7, 1}, Case{3, 11, 2}}) {
    for (int sign : {1, -1}) {
      CAPTURE(r);
      CAPTURE(p);
      CAPTURE(sign);
      const auto g = fickle_graph(r, k * p, sign);
      const auto m = propagate_rotations(g, p, default_seed(g));
      CHECK(m.lefschetz_consistent());
      CHECK(classes(m) == classes(refdata::fickle_points(r), p));
      REQUIRE(m.fixed_spheres().size() == 1);
      const auto v = m.fixed_spheres().front();
      CHECK(g.weight(v) == refdata::fickle_sphere_square);
      CHECK(mod(m.nodes[v].normal_rotation, p) == refdata::fickle_sphere_rotation);
    }
  }
}

TEST_CASE("property: Lefschetz count for every markup") {
  oracle::Gen g(33);
  const auto primes = oracle::primes_up_to(23);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const auto [a, b, c] = g.coprime_triple(90);
    const BrieskornTriple t(a, b, c);
    const auto gr = canonical_resolution(seifert_invariants(t));
    for (int p : primes) {
      if (!standard_action_valid(t, p)) continue;
      const auto m = propagate_rotations(gr, p, default_seed(gr));
      CHECK(m.lefschetz_consistent());
      CHECK(m.points.size() + 2 * m.fixed_spheres().size() == 1 + gr.size());
      for (const auto& pt : m.points) {
        CHECK(mod(pt.rotation.a, p) != 0);
        CHECK(mod(pt.rotation.b, p) != 0);
      }
      for (auto v : m.fixed_spheres()) CHECK(mod(m.nodes[v].normal_rotation, p) != 0);
      ++checked;
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("propagation refuses a non-free boundary action") {
  const auto g = resolution(3, 16, 113);
  CHECK_THROWS_AS(propagate_rotations(g, 2, default_seed(g)), InvariantViolation);
}

TEST_CASE("rotation classes") {
  CHECK(canonical_rotation_class({3, 3}, 5) == canonical_rotation_class({2, 2}, 5));
  CHECK(canonical_rotation_class({1, 2}, 5) == canonical_rotation_class({-2, -1}, 5));
  CHECK(canonical_rotation_class({1, 2}, 5) == canonical_rotation_class({2, 1}, 5));
  CHECK_FALSE(canonical_rotation_class({1, 1}, 5) == canonical_rotation_class({1, 2}, 5));
}

TEST_CASE("dot export") {
  PlumbingGraph g;
  g.add_node(Integer(-1));
  g.add_node(Integer(-2));
  g.add_edge(0, 1);
  std::ostringstream out;
  write_dot(out, g, "x");
  CHECK(out.str() == "graph x {\n  n0 [label=\"-1\"];\n  n1 [label=\"-2\"];\n  n0 -- n1;\n}\n");
}
