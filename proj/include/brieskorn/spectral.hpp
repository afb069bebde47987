#pragma once

// Equivariant eta invariants, rho invariants and lens-space torsion, all in
// exact cyclotomic arithmetic.
//
// Normalization: eta_t is the G-signature defect. rho is taken with the
// signature-operator normalization rho(gamma_l) = (2/p) sum_{t != 1}
// eta_t (chi_l(t) - 1), which makes the cotangent formula for lens spaces
// and the Fourier transform of nu(r, s) agree exactly. The inverse is
// sum_l rho(gamma_l) conj(chi_l(t)) = 2 eta_t.

#include "brieskorn/arith.hpp"
#include "brieskorn/cyclotomic.hpp"
#include "brieskorn/plumbing.hpp"
#include "brieskorn/seifert.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace brieskorn {

/// eta_t at t = zeta^j for j = 1..p-1.
struct EtaProfile {
  int p = 0;
  std::map<std::int64_t, CyclotomicNumber> values;
};

/// rho at gamma_l for l = 0..p-1.
struct RhoTable {
  int p = 0;
  std::map<std::int64_t, Rational> values;

  friend bool operator==(const RhoTable&, const RhoTable&) = default;
};

struct FixedSurface {
  Integer self_intersection;
  std::int64_t normal_rotation = 0;
};

struct FixedPointData {
  std::vector<RotationPair> isolated;
  std::vector<FixedSurface> surfaces;
  Integer signature;
};

/// Fixed-point data of an equivariant plumbing: rotation pairs of the
/// isolated points, (weight, c_F) of the fixed spheres, graph signature.
FixedPointData fixed_point_data(const PlumbingGraph& g, const EquivariantMarkup& m);

/// ((t^a+1)(t^b+1)) / ((t^a-1)(t^b-1)) at t = zeta_p^j.
CyclotomicNumber nu_defect(std::int64_t a, std::int64_t b, int p, std::int64_t j);

/// -4 t^c / (t^c - 1)^2 at t = zeta_p^j: the defect of a fixed surface of
/// square 1 with normal rotation c.
CyclotomicNumber surface_defect(std::int64_t c, int p, std::int64_t j);

/// j -> nu(a, b; zeta^j): eta of S^3 with the linear action of rotation (a, b).
EtaProfile lens_eta(int p, std::int64_t a, std::int64_t b);

/// sum nu(points) + sum [F]^2 * surface_defect(c_F) - signature, for every
/// t != 1. Asserts the result is Galois-equivariant.
EtaProfile eta_from_fixed_data(const FixedPointData& fd, int p);

/// value(jk) == galois_k(value(j)) for all j, k.
bool is_galois_equivariant(const EtaProfile& e);

bool operator==(const EtaProfile& a, const EtaProfile& b);

/// The cotangent sum (4/p) sum_k cot(pi k r/p) cot(pi k s/p) sin^2(pi k l/p),
/// evaluated exactly through cot(pi x/p) = i (zeta^x + 1)/(zeta^x - 1).
Rational rho_lens_exact(int p, std::int64_t r, std::int64_t s, std::int64_t l);
/// The same sum in double precision (cross-check only).
double rho_lens_float(int p, std::int64_t r, std::int64_t s, std::int64_t l);
RhoTable rho_lens_table(int p, std::int64_t r, std::int64_t s);

/// Throws InvariantViolation if a value is not rational.
RhoTable rho_from_eta(const EtaProfile& e);
/// Inverse transform: eta_t = (1/2) sum_l rho(gamma_l) conj(chi_l(t)).
EtaProfile eta_from_rho(const RhoTable& rho);

/// (zeta^r - 1)(zeta^s - 1).
CyclotomicNumber torsion_lens(int p, std::int64_t r, std::int64_t s);

struct LensCandidate {
  std::int64_t r = 0;  // representative, residues in 1..p-1
  std::int64_t s = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> members;  // all (r, s) in the class passing both tests
  std::int64_t product_residue = 0;                  // a1 a2 a3 mod p
  std::int64_t rs_residue = 0;                       // r s mod p
  std::array<std::int64_t, 3> triple_residues{};     // a_i mod p
  std::array<std::int64_t, 3> matched_target{};      // entry of {r, s, 1} matched to a_i
  std::array<int, 3> matched_sign{};                 // a_i = sign * target (mod p)
  bool rho_match = false;
  RhoTable quotient_rho;
  RhoTable lens_rho;
};

/// All (r, s) mod p with a1 a2 a3 = rs and {a1, a2, a3} = {r, s, 1} up to
/// sign (mod p), grouped by (r,s) ~ (s,r) ~ (-r,-s), each annotated with the
/// rho comparison of Sigma/Z_p (via the canonical resolution) against
/// L(p; r, s). Requires standard_action_valid(t, p).
std::vector<LensCandidate> ll_extension_search(const BrieskornTriple& t, int p);

/// eta of Sigma(a1,a2,a3) with the Z/p subgroup of the circle action,
/// computed from its canonical resolution.
EtaProfile brieskorn_eta(const BrieskornTriple& t, int p);

}  // namespace brieskorn
