#include "brieskorn/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace brieskorn {

namespace {

void require_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

void require_unit(std::int64_t x, int p, const char* what) {
  if (mod(x, p) == 0) throw std::invalid_argument(std::string(what) + " must be nonzero mod p");
}

LaurentPolynomial binomial(std::int64_t e, int constant) {
  LaurentPolynomial f;
  f.add(e, 1);
  f.add(0, constant);
  return f;
}

}  // namespace

FixedPointData fixed_point_data(const PlumbingGraph& g, const EquivariantMarkup& m) {
  if (m.nodes.size() != g.size()) throw std::invalid_argument("markup does not belong to this graph");
  FixedPointData fd;
  for (const auto& pt : m.points) fd.isolated.push_back(pt.rotation);
  for (const std::size_t v : m.fixed_spheres())
    fd.surfaces.push_back({g.weight(v), m.nodes[v].normal_rotation});
  fd.signature = graph_signature(g).signature;
  return fd;
}

CyclotomicNumber nu_defect(std::int64_t a, std::int64_t b, int p, std::int64_t j) {
  require_prime(p);
  require_unit(a, p, "rotation number");
  require_unit(b, p, "rotation number");
  require_unit(j, p, "j");
  return evaluate_ratio(binomial(a, 1) * binomial(b, 1), binomial(a, -1) * binomial(b, -1), p, j);
}

CyclotomicNumber surface_defect(std::int64_t c, int p, std::int64_t j) {
  require_prime(p);
  require_unit(c, p, "normal rotation");
  require_unit(j, p, "j");
  LaurentPolynomial num;
  num.add(c, -4);
  return evaluate_ratio(num, binomial(c, -1) * binomial(c, -1), p, j);
}

namespace {

// nu(a, b; zeta^k) for k = 1..p-1 (index k-1). The values form one Galois
// orbit, so only k = 1 needs a field inversion.
std::vector<CyclotomicNumber> nu_orbit(std::int64_t a, std::int64_t b, int p) {
  const auto first = nu_defect(a, b, p, 1);
  std::vector<CyclotomicNumber> out;
  for (std::int64_t k = 1; k < p; ++k) out.push_back(first.galois(k));
  return out;
}

Rational rho_from_nu_orbit(int p, const std::vector<CyclotomicNumber>& nu, std::int64_t l) {
  // cot(pi k r/p) cot(pi k s/p) = -nu(r, s; zeta^k) and
  // 4 sin^2(pi k l/p) = 2 - zeta^(kl) - zeta^(-kl).
  CyclotomicNumber sum(p);
  for (std::int64_t k = 1; k < p; ++k) {
    CyclotomicNumber sin2 = CyclotomicNumber(p, Rational(2)) - CyclotomicNumber::zeta_power(p, k * l) -
                            CyclotomicNumber::zeta_power(p, -k * l);
    sum -= nu[k - 1] * sin2;
  }
  sum *= Rational(1, p);
  try {
    return rational_value(sum);
  } catch (const std::domain_error&) {
    throw InvariantViolation("lens-space rho is not rational");
  }
}

}  // namespace

EtaProfile lens_eta(int p, std::int64_t a, std::int64_t b) {
  EtaProfile e{p, {}};
  const auto nu = nu_orbit(a, b, p);
  for (std::int64_t j = 1; j < p; ++j) e.values.emplace(j, nu[j - 1]);
  return e;
}

EtaProfile eta_from_fixed_data(const FixedPointData& fd, int p) {
  require_prime(p);
  EtaProfile e{p, {}};
  for (std::int64_t j = 1; j < p; ++j) {
    CyclotomicNumber eta(p, Rational(-fd.signature));
    for (const auto& pt : fd.isolated) eta += nu_defect(pt.a, pt.b, p, j);
    for (const auto& f : fd.surfaces) eta += surface_defect(f.normal_rotation, p, j) * Rational(f.self_intersection);
    e.values.emplace(j, std::move(eta));
  }
  if (!is_galois_equivariant(e)) throw InvariantViolation("eta profile is not Galois-equivariant");
  return e;
}

bool is_galois_equivariant(const EtaProfile& e) {
  for (const auto& [j, value] : e.values)
    for (std::int64_t k = 1; k < e.p; ++k)
      if (!(e.values.at(mod(j * k, e.p)) == value.galois(k))) return false;
  return true;
}

bool operator==(const EtaProfile& a, const EtaProfile& b) {
  if (a.p != b.p || a.values.size() != b.values.size()) return false;
  for (const auto& [j, v] : a.values) {
    auto it = b.values.find(j);
    if (it == b.values.end() || !(it->second == v)) return false;
  }
  return true;
}

Rational rho_lens_exact(int p, std::int64_t r, std::int64_t s, std::int64_t l) {
  require_prime(p);
  require_unit(r, p, "r");
  require_unit(s, p, "s");
  return rho_from_nu_orbit(p, nu_orbit(r, s, p), l);
}

double rho_lens_float(int p, std::int64_t r, std::int64_t s, std::int64_t l) {
  const double pi = std::numbers::pi;
  double sum = 0.0;
  for (std::int64_t k = 1; k < p; ++k) {
    const double x = pi * static_cast<double>(k) / p;
    const double sn = std::sin(x * static_cast<double>(l));
    sum += sn * sn / (std::tan(x * static_cast<double>(r)) * std::tan(x * static_cast<double>(s)));
  }
  return 4.0 * sum / p;
}

RhoTable rho_lens_table(int p, std::int64_t r, std::int64_t s) {
  require_prime(p);
  require_unit(r, p, "r");
  require_unit(s, p, "s");
  const auto nu = nu_orbit(r, s, p);
  RhoTable t{p, {}};
  for (std::int64_t l = 0; l < p; ++l) t.values.emplace(l, rho_from_nu_orbit(p, nu, l));
  return t;
}

RhoTable rho_from_eta(const EtaProfile& e) {
  const int p = e.p;
  RhoTable t{p, {}};
  for (std::int64_t l = 0; l < p; ++l) {
    CyclotomicNumber sum(p);
    for (const auto& [j, eta] : e.values) sum += eta * (CyclotomicNumber::zeta_power(p, j * l) - Rational(1));
    sum *= Rational(2, p);
    try {
      t.values.emplace(l, rational_value(sum));
    } catch (const std::domain_error&) {
      throw InvariantViolation("rho value at gamma_" + std::to_string(l) + " is not rational");
    }
  }
  return t;
}

EtaProfile eta_from_rho(const RhoTable& rho) {
  const int p = rho.p;
  EtaProfile e{p, {}};
  for (std::int64_t j = 1; j < p; ++j) {
    CyclotomicNumber sum(p);
    for (const auto& [l, value] : rho.values) sum += CyclotomicNumber::zeta_power(p, -j * l) * value;
    sum *= Rational(1, 2);
    e.values.emplace(j, std::move(sum));
  }
  return e;
}

CyclotomicNumber torsion_lens(int p, std::int64_t r, std::int64_t s) {
  require_prime(p);
  require_unit(r, p, "r");
  require_unit(s, p, "s");
  return (CyclotomicNumber::zeta_power(p, r) - Rational(1)) * (CyclotomicNumber::zeta_power(p, s) - Rational(1));
}

EtaProfile brieskorn_eta(const BrieskornTriple& t, int p) {
  if (!standard_action_valid(t, p)) throw std::invalid_argument("p divides a1 a2 a3");
  const auto g = canonical_resolution(seifert_invariants(t));
  const auto markup = propagate_rotations(g, p, default_seed(g));
  return eta_from_fixed_data(fixed_point_data(g, markup), p);
}

namespace {

struct MultisetMatch {
  std::array<std::int64_t, 3> target{};
  std::array<int, 3> sign{};
  int flips = 0;
};

// Matches residues a_i against {r, s, 1} up to order and sign, preferring
// the fewest sign changes.
std::optional<MultisetMatch> match_up_to_sign(const std::array<std::int64_t, 3>& a, std::int64_t r,
                                              std::int64_t s, int p) {
  std::array<std::int64_t, 3> targets{r, s, 1};
  std::array<int, 3> order{0, 1, 2};
  std::optional<MultisetMatch> best;
  do {
    MultisetMatch m;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      const std::int64_t tgt = targets[order[i]];
      m.target[i] = tgt;
      if (mod(a[i] - tgt, p) == 0) {
        m.sign[i] = 1;
      } else if (mod(a[i] + tgt, p) == 0) {
        m.sign[i] = -1;
        ++m.flips;
      } else {
        ok = false;
      }
    }
    if (ok && (!best || m.flips < best->flips)) best = m;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace

std::vector<LensCandidate> ll_extension_search(const BrieskornTriple& t, int p) {
  require_prime(p);
  if (!standard_action_valid(t, p)) throw std::invalid_argument("p divides a1 a2 a3");

  std::array<std::int64_t, 3> residues{};
  for (int i = 0; i < 3; ++i) residues[i] = mod(t[i], p);
  const std::int64_t product = to_int64(mod(t.product(), Integer(p)));

  struct Hit {
    std::int64_t r, s;
    MultisetMatch match;
  };
  std::map<RotationPair, std::vector<Hit>> classes;
  for (std::int64_t r = 1; r < p; ++r)
    for (std::int64_t s = 1; s < p; ++s) {
      if (mod(r * s - product, p) != 0) continue;
      auto m = match_up_to_sign(residues, r, s, p);
      if (!m) continue;
      classes[canonical_rotation_class(make_rotation_pair(r, s, p), p)].push_back({r, s, *m});
    }

  std::vector<LensCandidate> out;
  if (classes.empty()) return out;
  const RhoTable quotient = rho_from_eta(brieskorn_eta(t, p));

  for (auto& [key, hits] : classes) {
    const auto best = std::min_element(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) {
      if (x.match.flips != y.match.flips) return x.match.flips < y.match.flips;
      return std::pair(std::min(x.r, x.s), std::max(x.r, x.s)) < std::pair(std::min(y.r, y.s), std::max(y.r, y.s));
    });
    LensCandidate c;
    c.r = std::min(best->r, best->s);
    c.s = std::max(best->r, best->s);
    for (const auto& h : hits) c.members.emplace_back(h.r, h.s);
    c.product_residue = product;
    c.rs_residue = mod(c.r * c.s, p);
    c.triple_residues = residues;
    c.matched_target = best->match.target;
    c.matched_sign = best->match.sign;
    c.quotient_rho = quotient;
    c.lens_rho = rho_lens_table(p, c.r, c.s);
    c.rho_match = c.quotient_rho == c.lens_rho;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const LensCandidate& x, const LensCandidate& y) { return std::pair(x.r, x.s) < std::pair(y.r, y.s); });
  return out;
}

}  // namespace brieskorn
