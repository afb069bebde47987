#include "brieskorn/spectral.hpp"
#include "support/oracles.hpp"
#include "support/reference_data.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace brieskorn;

namespace {

CyclotomicNumber z(int p, std::int64_t k) { return CyclotomicNumber::zeta_power(p, k); }
CyclotomicNumber one(int p) { return CyclotomicNumber(p, Rational(1)); }

// Fixed-point data exactly as printed for the indefinite plumbing.
FixedPointData printed_fickle_data(std::int64_t r, int p) {
  FixedPointData fd;
  for (auto [a, b] : refdata::fickle_points(r)) fd.isolated.push_back(make_rotation_pair(a, b, p));
  fd.surfaces.push_back({Integer(refdata::fickle_sphere_square), refdata::fickle_sphere_rotation});
  fd.signature = refdata::fickle_signature;
  return fd;
}

EtaProfile eta_of_plumbing(const PlumbingGraph& g, int p) {
  const auto m = propagate_rotations(g, p, default_seed(g));
  return eta_from_fixed_data(fixed_point_data(g, m), p);
}

}  // namespace

TEST_CASE("nu: small values, symmetry, and agreement with the polynomial oracle") {
  CHECK(nu_defect(1, 2, 3, 1) == one(3) * make_rational(1, 3));
  CHECK(nu_defect(1, 1, 3, 1) == one(3) * make_rational(-1, 3));
  for (int p : {5, 7, 11}) {
    for (std::int64_t a = 1; a < p; ++a)
      for (std::int64_t b = 1; b < p; ++b)
        for (std::int64_t j = 1; j < p; ++j) {
          const auto v = nu_defect(a, b, p, j);
          CHECK(v.coefficients() == oracle::nu_reference(a, b, p, j));
          CHECK(nu_defect(-a, b, p, j) == v * Rational(-1));
          CHECK(nu_defect(b, a, p, j) == v);
          CHECK(nu_defect(a, b, p, -j) == v);
          CHECK(v.conjugate() == v);
        }
  }
}

TEST_CASE("the first three terms of the Stern-family defect cancel") {
  for (int p : {5, 7, 11, 13}) {
    for (std::int64_t j = 1; j < p; ++j) {
      const auto t = z(p, j);
      const auto d = t - one(p);
      const auto four_t_over = Rational(4) * t / (d * d);
      const auto sum = Rational(-2) * nu_defect(1, 2, p, j) + four_t_over + one(p) * Rational(2);
      CHECK(sum.is_zero());
      // The library's surface term is the same quantity with the opposite sign.
      CHECK(surface_defect(1, p, j) == Rational(-1) * four_t_over);
    }
  }
}

TEST_CASE("Stern-family eta equals that of the lens space with rotation (r, 2r+2)") {
  struct Case {
    std::int64_t r;
    int p;
    std::int64_t k;
  };
  for (auto [r, p, k] : {Case{3, 5, 1}, Case{3, 7, 1}, Case{5, 7, 1}}) {
    CAPTURE(r);
    CAPTURE(p);
    const auto target = lens_eta(p, r, 2 * r + 2);
    const auto printed = eta_from_fixed_data(printed_fickle_data(r, p), p);
    CHECK(printed == target);
    for (int sign : {1, -1}) CHECK(eta_of_plumbing(fickle_graph(r, k * p, sign), p) == target);
    CHECK(rho_from_eta(printed) == rho_lens_table(p, r, 2 * r + 2));
  }
}

TEST_CASE("Sigma(3,16,113), Z/5: three routes to eta agree") {
  const BrieskornTriple t(3, 16, 113);
  const auto g = canonical_resolution(seifert_invariants(t));
  const auto m = propagate_rotations(g, 5, default_seed(g));
  const auto fd = fixed_point_data(g, m);

  CHECK(fd.signature == -11);
  CHECK(fd.surfaces.size() == 3);
  CHECK(fd.isolated.size() == 6);
  std::multiset<std::pair<std::int64_t, std::int64_t>> got, want;
  for (const auto& r : fd.isolated) {
    const auto c = canonical_rotation_class(r, 5);
    got.emplace(c.a, c.b);
  }
  for (auto [a, b] : refdata::sigma_3_16_113_points()) {
    const auto c = canonical_rotation_class(make_rotation_pair(a, b, 5), 5);
    want.emplace(c.a, c.b);
  }
  CHECK(got == want);

  const auto via_resolution = eta_from_fixed_data(fd, 5);
  const auto via_fickle = eta_from_fixed_data(printed_fickle_data(3, 5), 5);
  const auto lens = lens_eta(5, 3, 8);
  CHECK(via_resolution == lens);
  CHECK(via_fickle == lens);
  CHECK(brieskorn_eta(t, 5) == lens);

  // Floating-point cross-check of the resolution route.
  for (std::int64_t j = 1; j < 5; ++j) {
    std::complex<double> direct = 0;
    for (const auto& r : fd.isolated) direct += oracle::nu_float(r.a, r.b, 5, j);
    for (const auto& s : fd.surfaces) {
      const auto tc = oracle::zeta(5, s.normal_rotation * j);
      direct += s.self_intersection.get_d() * (-4.0 * tc / ((tc - 1.0) * (tc - 1.0)));
    }
    direct -= fd.signature.get_d();
    CHECK(std::abs(direct - via_resolution.values.at(j).to_complex()) < 1e-9);
  }
}

TEST_CASE("rho of lens spaces: exact, floating, and Fourier transform of nu agree") {
  for (int p : oracle::primes_up_to(13)) {
    for (std::int64_t r = 1; r < p; ++r)
      for (std::int64_t s = 1; s < p; ++s) {
        CAPTURE(p);
        CAPTURE(r);
        CAPTURE(s);
        const auto table = rho_lens_table(p, r, s);
        CHECK(table.values.at(0) == 0);
        for (std::int64_t l = 0; l < p; ++l) {
          const auto exact = rho_lens_exact(p, r, s, l);
          CHECK(table.values.at(l) == exact);
          CHECK(std::abs(exact.get_d() - rho_lens_float(p, r, s, l)) < 1e-9);
          CHECK(std::abs(exact.get_d() - oracle::rho_cot_float(p, r, s, l)) < 1e-9);
        }
        if (p == 2) continue;
        const auto eta = lens_eta(p, r, s);
        CHECK(is_galois_equivariant(eta));
        CHECK(rho_from_eta(eta) == table);
        CHECK(eta_from_rho(table) == eta);
      }
  }
}

TEST_CASE("rho_from_eta rejects a profile that is not Galois-equivariant") {
  auto e = lens_eta(5, 1, 2);
  e.values.at(1) = z(5, 1);
  CHECK_FALSE(is_galois_equivariant(e));
  CHECK_THROWS_AS(rho_from_eta(e), InvariantViolation);
}

TEST_CASE("lens-space torsion") {
  for (int p : {5, 7, 11}) {
    for (std::int64_t r = 1; r < p; ++r)
      for (std::int64_t s = 1; s < p; ++s) {
        const auto tau = torsion_lens(p, r, s);
        CHECK(tau == (z(p, r) - one(p)) * (z(p, s) - one(p)));
        const auto f = (oracle::zeta(p, r) - 1.0) * (oracle::zeta(p, s) - 1.0);
        CHECK(std::abs(tau.to_complex() - f) < 1e-12);
        CHECK(torsion_lens(p, s, r) == tau);
        CHECK(torsion_lens(p, -r, -s) == tau.conjugate());
      }
  }
}

TEST_CASE("property: eta of every canonical-resolution markup is Galois-equivariant with rational rho") {
  oracle::Gen g(61);
  const auto primes = oracle::primes_up_to(13);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto [a, b, c] = g.coprime_triple(60);
    const BrieskornTriple t(a, b, c);
    for (int p : primes) {
      if (p == 2 || !standard_action_valid(t, p)) continue;
      const auto eta = brieskorn_eta(t, p);
      CHECK(is_galois_equivariant(eta));
      const auto rho = rho_from_eta(eta);
      CHECK(rho.values.at(0) == 0);
      CHECK(eta_from_rho(rho) == eta);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("locally linear search: Sigma(3,16,113) with Z/5") {
  const BrieskornTriple t(3, 16, 113);
  CHECK(t.product() % 5 == 24 % 5);
  const auto found = ll_extension_search(t, 5);
  REQUIRE(found.size() == 1);
  const auto& c = found.front();
  CHECK(std::make_pair(c.r, c.s) == std::make_pair<std::int64_t, std::int64_t>(3, 3));
  // (3, 8) reduces to (3, 3); (2, 2) is the same class under (r,s) -> (-r,-s).
  CHECK(std::find(c.members.begin(), c.members.end(), std::make_pair<std::int64_t, std::int64_t>(3, 8 % 5)) !=
        c.members.end());
  CHECK(std::find(c.members.begin(), c.members.end(), std::make_pair<std::int64_t, std::int64_t>(2, 2)) !=
        c.members.end());
  CHECK(c.product_residue == 4);
  CHECK(c.rs_residue == 4);
  CHECK(c.triple_residues == std::array<std::int64_t, 3>{3, 1, 3});
  for (int i = 0; i < 3; ++i) CHECK(mod(c.matched_sign[i] * c.matched_target[i], 5) == c.triple_residues[i]);
  auto targets = c.matched_target;
  std::sort(targets.begin(), targets.end());
  CHECK(targets == std::array<std::int64_t, 3>{1, 3, 3});
  CHECK(c.rho_match);
  CHECK(c.quotient_rho == c.lens_rho);
  CHECK(c.lens_rho == rho_lens_table(5, 3, 8));
}

TEST_CASE("locally linear search: no candidates for Sigma(2,3,5) with Z/7") {
  CHECK(ll_extension_search(BrieskornTriple(2, 3, 5), 7).empty());
  CHECK_THROWS_AS(ll_extension_search(BrieskornTriple(3, 16, 113), 3), std::invalid_argument);
}

TEST_CASE("property: every search candidate satisfies both congruences") {
  oracle::Gen g(62);
  for (int trial = 0; trial < 80; ++trial) {
    const auto [a, b, c] = g.coprime_triple(80);
    const BrieskornTriple t(a, b, c);
    for (int p : {5, 7, 11}) {
      if (!standard_action_valid(t, p)) continue;
      for (const auto& cand : ll_extension_search(t, p)) {
        CHECK(mod(Integer(cand.r) * cand.s, p) == mod(t.product(), p));
        for (auto [r, s] : cand.members) {
          CHECK(mod(Integer(r) * s, p) == mod(t.product(), p));
          std::multiset<std::int64_t> lhs, rhs;
          for (int i = 0; i < 3; ++i) lhs.insert(std::min(mod(t[i], p), p - mod(t[i], p)));
          for (std::int64_t x : {r, s, std::int64_t{1}}) rhs.insert(std::min(mod(x, p), p - mod(x, p)));
          CHECK(lhs == rhs);
        }
        CHECK(cand.rho_match == (cand.quotient_rho == cand.lens_rho));
      }
    }
  }
}
