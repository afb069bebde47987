#include "brieskorn/lattice.hpp"
#include "brieskorn/obstruction.hpp"
#include "brieskorn/plumbing.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace brieskorn;

namespace {

struct Setup {
  PlumbingGraph graph;
  EquivariantMarkup markup;
  Diagonalization diag;
  ConstraintSystem system;
};

Setup setup(const PlumbingGraph& g, int p) {
  Setup s{g, propagate_rotations(g, p, default_seed(g)), {}, {}};
  s.diag = std::get<Diagonalization>(diagonalize(UnimodularForm(intersection_matrix(g))));
  s.system = build_constraints(s.markup, s.diag);
  return s;
}

Setup setup(std::int64_t a, std::int64_t b, std::int64_t c, int p) {
  return setup(canonical_resolution(seifert_invariants(BrieskornTriple(a, b, c))), p);
}

EquivariantMarkup manual_markup(std::vector<bool> fixed) {
  EquivariantMarkup m;
  m.p = 5;
  m.nodes.resize(fixed.size());
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    m.nodes[i].fixed = fixed[i];
    m.nodes[i].normal_rotation = fixed[i] ? 1 : 0;
  }
  return m;
}

Diagonalization diagonal_of(const IntMatrix& q) { return std::get<Diagonalization>(diagonalize(UnimodularForm(q))); }

// The witness pattern: a fixed (-1)-sphere, two invariant spheres meeting it
// and each other trivially, and the arithmetic 0 = -1 - sum_{i != pivot} a_i b_i.
void check_witness(const ConstraintSystem& cs, const InnerProductWitness& w) {
  CHECK(cs.kinds[w.fixed_sphere] == SphereKind::fixed);
  CHECK(cs.intersection(w.fixed_sphere, w.fixed_sphere) == -1);
  CHECK(cs.kinds[w.left] == SphereKind::invariant);
  CHECK(cs.kinds[w.right] == SphereKind::invariant);
  CHECK(abs(cs.intersection(w.fixed_sphere, w.left)) == 1);
  CHECK(abs(cs.intersection(w.fixed_sphere, w.right)) == 1);
  CHECK(cs.intersection(w.left, w.right) == 0);
  CHECK(w.off_pivot_sum == -1);
  Integer sum = 0;
  for (std::size_t i = 0; i < cs.rank; ++i)
    if (i != w.pivot) sum += cs.columns(i, w.left) * cs.columns(i, w.right);
  CHECK(sum == w.off_pivot_sum);
  CHECK(cs.columns(w.negative_index, w.left) * cs.columns(w.negative_index, w.right) < 0);
  CHECK(abs(cs.columns(w.pivot, w.fixed_sphere)) == 1);
}

void check_infeasible(const ConstraintSystem& cs, bool want_witness) {
  const auto v = decide(cs);
  REQUIRE(v.status == Feasibility::infeasible);
  REQUIRE(v.certificate);
  CHECK(verify_certificate(cs, *v.certificate));
  CHECK_FALSE(v.certificate->text.empty());
  if (want_witness) {
    REQUIRE(v.certificate->witness);
    check_witness(cs, *v.certificate->witness);
  }
  if (cs.rank <= 12) CHECK(decide_exhaustive(cs) == Feasibility::infeasible);
}

}  // namespace

TEST_CASE("Sigma(3,16,113) with Z/5: the central fixed (-1)-sphere is obstructed") {
  const auto s = setup(3, 16, 113, 5);
  CHECK(s.system.variable_count() == 22);
  check_infeasible(s.system, true);
  const auto w = *decide(s.system).certificate->witness;
  CHECK(w.fixed_sphere == *s.graph.center());
  // Both invariant spheres are neighbours of the center.
  const auto b1 = s.graph.branch(0).front(), b2 = s.graph.branch(1).front();
  CHECK(std::minmax(w.left, w.right) == std::minmax(b1, b2));
}

TEST_CASE("Gamma_k, s = 3..8, every prime up to 13 coprime to the triple") {
  int runs = 0;
  for (std::int64_t k = 3; k <= 8; ++k) {
    const BrieskornTriple t(3, 3 * k + 1, 21 * k + 8);
    for (int p : {5, 7, 11, 13}) {
      if (!standard_action_valid(t, p)) continue;
      CAPTURE(k);
      CAPTURE(p);
      const auto s = setup(gamma_k_graph(k), p);
      CHECK(s.markup.is_fixed(*s.graph.center()));
      check_infeasible(s.system, true);
      CHECK(decide(s.system).certificate->witness->fixed_sphere == *s.graph.center());
      ++runs;
    }
  }
  CHECK(runs >= 18);
}

TEST_CASE("a lone fixed (-1)-sphere is unobstructed") {
  const auto cs = build_constraints(manual_markup({true}), diagonal_of(IntMatrix{{-1}}));
  const auto v = decide(cs);
  CHECK(v.status == Feasibility::feasible);
  CHECK(cs.satisfied_by(v.assignment));
  CHECK(decide_exhaustive(cs) == Feasibility::feasible);
  CHECK_FALSE(find_inner_product_witness(cs));
}

TEST_CASE("a fixed sphere with a coefficient of size 2 is obstructed outright") {
  // [-5 2; 2 -1] is unimodular and definite; the first class has norm 5.
  const auto cs = build_constraints(manual_markup({true, false}), diagonal_of(IntMatrix{{-5, 2}, {2, -1}}));
  const auto v = decide(cs);
  REQUIRE(v.status == Feasibility::infeasible);
  REQUIRE(v.certificate->cycle.size() == 1);
  CHECK(v.certificate->cycle.front().source == ConstraintSource::fixed_magnitude);
  CHECK(verify_certificate(cs, *v.certificate));
  CHECK(decide_exhaustive(cs) == Feasibility::infeasible);
}

TEST_CASE("tampered certificates are rejected") {
  const auto s = setup(3, 16, 113, 5);
  const auto cert = *decide(s.system).certificate;

  auto dropped = cert;
  dropped.cycle.pop_back();
  dropped.witness.reset();
  CHECK_FALSE(verify_certificate(s.system, dropped));

  auto flipped = cert;
  flipped.cycle.front().parity = -flipped.cycle.front().parity;
  flipped.witness.reset();
  CHECK_FALSE(verify_certificate(s.system, flipped));

  auto foreign = cert;
  foreign.witness.reset();
  foreign.cycle.front().coefficient += 7;
  CHECK_FALSE(verify_certificate(s.system, foreign));
}

TEST_CASE("property: decide agrees with exhaustive search and its output checks out") {
  oracle::Gen g(51);
  int infeasible = 0, feasible = 0;
  const auto primes = oracle::primes_up_to(19);
  for (int trial = 0; trial < 600; ++trial) {
    const auto [a, b, c] = g.coprime_triple(50);
    const BrieskornTriple t(a, b, c);
    const auto gr = canonical_resolution(seifert_invariants(t));
    if (gr.size() > 12) continue;
    const auto r = diagonalize(UnimodularForm(intersection_matrix(gr)));
    if (!std::holds_alternative<Diagonalization>(r)) continue;
    const int p = primes[static_cast<std::size_t>(g.uniform(0, static_cast<std::int64_t>(primes.size()) - 1))];
    if (!standard_action_valid(t, p)) continue;
    const auto cs = build_constraints(propagate_rotations(gr, p, default_seed(gr)), std::get<Diagonalization>(r));
    const auto v = decide(cs);
    CHECK(v.status == decide_exhaustive(cs));
    if (v.status == Feasibility::feasible) {
      ++feasible;
      CHECK(cs.satisfied_by(v.assignment));
    } else {
      ++infeasible;
      CHECK(verify_certificate(cs, *v.certificate));
    }
  }
  CHECK(feasible + infeasible > 60);
}

TEST_CASE("property: decide agrees with exhaustive search on random definite systems") {
  // Random unimodular M built from elementary moves, tracked with its inverse;
  // Q = -M^t M is then standard and M is a valid C_inv.
  oracle::Gen g(53);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto n = static_cast<std::size_t>(g.uniform(1, 7));
    IntMatrix m = IntMatrix::identity(n), inv = IntMatrix::identity(n);
    for (int move = 0; move < g.uniform(0, 6) && n > 1; ++move) {
      const auto i = static_cast<std::size_t>(g.uniform(0, static_cast<std::int64_t>(n) - 1));
      auto j = static_cast<std::size_t>(g.uniform(0, static_cast<std::int64_t>(n) - 2));
      if (j >= i) ++j;
      const int k = g.uniform(0, 1) ? 1 : -1;
      // row_i += k row_j on m; column_j -= k column_i on inv.
      for (std::size_t c = 0; c < n; ++c) m(i, c) += k * m(j, c);
      for (std::size_t r = 0; r < n; ++r) inv(r, j) -= k * inv(r, i);
    }
    REQUIRE(inv * m == IntMatrix::identity(n));
    std::vector<bool> fixed(n);
    for (std::size_t i = 0; i < n; ++i) fixed[i] = g.uniform(0, 2) == 0;
    const auto cs = build_constraints(manual_markup(fixed), Diagonalization{inv, m});
    const auto v = decide(cs);
    CHECK(v.status == decide_exhaustive(cs));
    if (v.status == Feasibility::feasible) {
      ++feasible;
      CHECK(cs.satisfied_by(v.assignment));
      CHECK_FALSE(find_inner_product_witness(cs));
    } else {
      ++infeasible;
      CHECK(verify_certificate(cs, *v.certificate));
      if (v.certificate->witness) check_witness(cs, *v.certificate->witness);
    }
  }
  CHECK(feasible > 50);
  CHECK(infeasible > 15);
}

TEST_CASE("property: the verdict ignores the choice of diagonal basis and node labels") {
  oracle::Gen g(52);
  for (auto [a, b, c, p] : {std::array<std::int64_t, 4>{3, 16, 113, 5}, {2, 5, 7, 11}, {3, 4, 5, 7}, {2, 3, 13, 5}}) {
    const auto base = setup(a, b, c, static_cast<int>(p));
    const auto status = decide(base.system).status;
    const auto n = base.diag.c_inv.rows();
    for (int trial = 0; trial < 10; ++trial) {
      // Signed permutation S of the diagonal basis: C_inv -> S C_inv, C -> C S^t.
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), g.rng);
      IntMatrix sgn(n, n);
      for (std::size_t i = 0; i < n; ++i) sgn(i, perm[i]) = g.uniform(0, 1) ? 1 : -1;
      Diagonalization d{base.diag.c * sgn.transpose(), sgn * base.diag.c_inv};
      const auto cs = build_constraints(base.markup, d);
      CHECK(decide(cs).status == status);

      // Node relabeling: permute the markup and the columns together.
      std::vector<std::size_t> nodes(n);
      for (std::size_t i = 0; i < n; ++i) nodes[i] = i;
      std::shuffle(nodes.begin(), nodes.end(), g.rng);
      EquivariantMarkup m = base.markup;
      IntMatrix cinv(n, n), cmat(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m.nodes[i] = base.markup.nodes[nodes[i]];
        for (std::size_t j = 0; j < n; ++j) {
          cinv(j, i) = base.diag.c_inv(j, nodes[i]);
          cmat(i, j) = base.diag.c(nodes[i], j);
        }
      }
      const auto relabeled = build_constraints(m, Diagonalization{cmat, cinv});
      const auto v = decide(relabeled);
      CHECK(v.status == status);
      if (v.certificate) CHECK(verify_certificate(relabeled, *v.certificate));
    }
  }
}

TEST_CASE("property: Casson-Harer triples, r, s <= 7, three smallest valid primes, all infeasible") {
  int runs = 0;
  for (std::int64_t r = 2; r <= 7; ++r)
    for (std::int64_t s = 1; s <= 7; ++s)
      for (int sign : {1, -1}) {
        BrieskornTriple t(2, 3, 5);
        try {
          t = family(FamilyKind::casson_harer, r, s, sign);
        } catch (const std::invalid_argument&) {
          continue;
        }
        const auto gr = canonical_resolution(seifert_invariants(t));
        const auto dr = diagonalize(UnimodularForm(intersection_matrix(gr)));
        REQUIRE(std::holds_alternative<Diagonalization>(dr));
        int used = 0;
        for (int p = 2; used < 3; ++p) {
          if (!is_prime(p) || !standard_action_valid(t, p)) continue;
          ++used;
          CAPTURE(t.to_string());
          CAPTURE(p);
          const auto cs = build_constraints(propagate_rotations(gr, p, default_seed(gr)), std::get<Diagonalization>(dr));
          const auto v = decide(cs);
          CHECK(v.status == Feasibility::infeasible);
          if (v.certificate) CHECK(verify_certificate(cs, *v.certificate));
          ++runs;
        }
      }
  CHECK(runs > 150);
}

TEST_CASE("names") {
  CHECK(feasibility_name(Feasibility::infeasible) == "infeasible");
  CHECK(constraint_source_name(ConstraintSource::coupling) == "coupling");
  ConstraintSystem cs;
  cs.spheres = 3;
  cs.rank = 3;
  CHECK(cs.variable_name(2) == "o(F3)");
  CHECK(cs.variable_name(4) == "s(e2)");
  CHECK(obstruction_hypothesis().find("acyclic") != std::string::npos);
}
