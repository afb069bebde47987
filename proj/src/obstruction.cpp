#include "brieskorn/obstruction.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace brieskorn {

std::string_view constraint_source_name(ConstraintSource s) {
  switch (s) {
    case ConstraintSource::fixed_coefficient: return "fixed-coefficient";
    case ConstraintSource::invariant_coefficient: return "invariant-coefficient";
    case ConstraintSource::coupling: return "coupling";
    case ConstraintSource::fixed_magnitude: return "fixed-magnitude";
  }
  return "?";
}

std::string_view feasibility_name(Feasibility f) {
  return f == Feasibility::feasible ? "feasible" : "infeasible";
}

std::string ConstraintSystem::variable_name(std::size_t var) const {
  if (var < spheres) return "o(F" + std::to_string(var + 1) + ")";
  return "s(e" + std::to_string(var - spheres + 1) + ")";
}

Integer ConstraintSystem::intersection(std::size_t a, std::size_t b) const {
  Integer sum = 0;
  for (std::size_t j = 0; j < rank; ++j) sum += columns(j, a) * columns(j, b);
  return -sum;
}

bool ConstraintSystem::satisfied_by(const std::vector<int>& assignment) const {
  if (assignment.size() != variable_count()) return false;
  for (const auto& c : constraints) {
    if (c.source == ConstraintSource::fixed_magnitude) return false;
    if (assignment[c.u] * assignment[c.v] != c.parity) return false;
  }
  return true;
}

ConstraintSystem build_constraints(const EquivariantMarkup& markup, const Diagonalization& d) {
  const std::size_t n = d.c_inv.rows();
  if (!d.c_inv.is_square() || markup.nodes.size() != n)
    throw std::invalid_argument("markup and diagonalization have different sizes");

  ConstraintSystem cs;
  cs.rank = n;
  cs.spheres = n;
  cs.columns = d.c_inv;
  for (std::size_t i = 0; i < n; ++i)
    cs.kinds.push_back(markup.is_fixed(i) ? SphereKind::fixed : SphereKind::invariant);

  for (std::size_t i = 0; i < n; ++i) {
    const bool fixed = cs.kinds[i] == SphereKind::fixed;
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& c = cs.columns(j, i);
      if (c == 0) continue;
      SignConstraint k;
      k.u = cs.orientation_var(i);
      k.v = cs.basis_var(j);
      k.parity = sign(c);
      k.sphere = i;
      k.index = j;
      k.coefficient = c;
      if (fixed)
        k.source = abs(c) >= 2 ? ConstraintSource::fixed_magnitude : ConstraintSource::fixed_coefficient;
      else
        k.source = ConstraintSource::invariant_coefficient;
      cs.constraints.push_back(std::move(k));
    }
  }

  for (std::size_t s = 0; s < n; ++s) {
    if (cs.kinds[s] != SphereKind::fixed || cs.intersection(s, s) != -1) continue;
    for (std::size_t f = 0; f < n; ++f) {
      if (f == s) continue;
      const Integer dot = cs.intersection(f, s);
      if (abs(dot) != 1) continue;
      SignConstraint k;
      k.u = cs.orientation_var(f);
      k.v = cs.orientation_var(s);
      k.parity = -sign(dot);
      k.source = ConstraintSource::coupling;
      k.sphere = f;
      k.index = s;
      k.coefficient = dot;
      cs.constraints.push_back(std::move(k));
    }
  }
  return cs;
}

namespace {

bool same_constraint(const SignConstraint& a, const SignConstraint& b) {
  return a.u == b.u && a.v == b.v && a.parity == b.parity && a.source == b.source &&
         a.sphere == b.sphere && a.index == b.index && a.coefficient == b.coefficient;
}

const SignConstraint& coefficient_constraint(const ConstraintSystem& cs, std::size_t sphere, std::size_t j) {
  for (const auto& c : cs.constraints)
    if (c.source != ConstraintSource::coupling && c.sphere == sphere && c.index == j) return c;
  throw InvariantViolation("no constraint for a nonzero coefficient");
}

std::string describe(const ConstraintSystem& cs, const SignConstraint& c) {
  std::ostringstream out;
  const std::string f = "F" + std::to_string(c.sphere + 1);
  switch (c.source) {
    case ConstraintSource::fixed_coefficient:
    case ConstraintSource::invariant_coefficient:
      out << cs.variable_name(c.u) << " * " << cs.variable_name(c.v) << " = " << c.parity
          << "  (" << (c.source == ConstraintSource::fixed_coefficient ? "fixed " : "invariant ") << f
          << " has e" << c.index + 1 << "-coefficient " << to_string(c.coefficient) << ")";
      break;
    case ConstraintSource::coupling:
      out << cs.variable_name(c.u) << " * " << cs.variable_name(c.v) << " = " << c.parity << "  ("
          << f << ".F" << c.index + 1 << " = " << to_string(c.coefficient)
          << ", oriented product must be -1)";
      break;
    case ConstraintSource::fixed_magnitude:
      out << "fixed " << f << " has e" << c.index + 1 << "-coefficient " << to_string(c.coefficient)
          << ", outside {0, +-1}";
      break;
  }
  return out.str();
}

std::string witness_text(const ConstraintSystem& cs, const InnerProductWitness& w) {
  std::ostringstream out;
  const auto name = [](std::size_t i) { return "F" + std::to_string(i + 1); };
  const Integer ak = cs.columns(w.negative_index, w.left);
  const Integer bk = cs.columns(w.negative_index, w.right);
  out << "fixed sphere " << name(w.fixed_sphere) << " (square -1, carried by e" << w.pivot + 1
      << ") meets invariant spheres " << name(w.left) << " and " << name(w.right) << ", which are disjoint. "
      << "In a standard basis " << name(w.left) << " and " << name(w.right)
      << " have e" << w.pivot + 1 << "-coefficients of equal sign, so 0 = " << name(w.left) << "." << name(w.right)
      << " = -1 - sum_{i != " << w.pivot + 1 << "} a_i b_i with every a_i b_i >= 0. "
      << "The computed coefficients give sum_{i != " << w.pivot + 1 << "} a_i b_i = " << to_string(w.off_pivot_sum)
      << ", with a_" << w.negative_index + 1 << " b_" << w.negative_index + 1 << " = "
      << to_string(ak) << " * " << to_string(bk) << " < 0, and no choice of signs changes a product a_i b_i.";
  return out.str();
}

std::string cycle_text(const ConstraintSystem& cs, const std::vector<SignConstraint>& cycle) {
  std::ostringstream out;
  if (cycle.size() == 1 && cycle.front().source == ConstraintSource::fixed_magnitude) {
    out << describe(cs, cycle.front()) << "; a fixed sphere has coefficients in {0, 1} in a standard basis.";
    return out.str();
  }
  out << "the sign equations";
  for (const auto& c : cycle) out << "\n  " << describe(cs, c);
  out << "\nform a closed cycle whose parities multiply to -1, so no signs satisfy them all.";
  return out.str();
}

struct Propagation {
  std::vector<int> value;                  // 0 = unassigned
  std::vector<std::size_t> parent_edge;    // constraint index, or npos at a root
  std::optional<std::vector<std::size_t>> conflict;  // constraint indices of an odd cycle
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Every constraint is binary, so propagating a pinned sign along the
// equation graph decides the system without any branching.
Propagation propagate(const ConstraintSystem& cs) {
  const std::size_t vars = cs.variable_count();
  std::vector<std::vector<std::size_t>> incident(vars);
  for (std::size_t e = 0; e < cs.constraints.size(); ++e) {
    incident[cs.constraints[e].u].push_back(e);
    incident[cs.constraints[e].v].push_back(e);
  }

  Propagation pr;
  pr.value.assign(vars, 0);
  pr.parent_edge.assign(vars, npos);

  auto path_to_root = [&](std::size_t x) {
    std::vector<std::pair<std::size_t, std::size_t>> path;  // (variable, edge to parent)
    while (pr.parent_edge[x] != npos) {
      const auto& c = cs.constraints[pr.parent_edge[x]];
      path.emplace_back(x, pr.parent_edge[x]);
      x = c.u == x ? c.v : c.u;
    }
    path.emplace_back(x, npos);
    return path;
  };

  for (std::size_t root = 0; root < vars; ++root) {
    if (pr.value[root] != 0) continue;
    pr.value[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (const std::size_t e : incident[x]) {
        const auto& c = cs.constraints[e];
        const std::size_t y = c.u == x ? c.v : c.u;
        const int want = c.parity * pr.value[x];
        if (pr.value[y] == 0) {
          pr.value[y] = want;
          pr.parent_edge[y] = e;
          queue.push_back(y);
        } else if (pr.value[y] != want) {
          const auto px = path_to_root(x);
          const auto py = path_to_root(y);
          std::map<std::size_t, std::size_t> depth_in_x;
          for (std::size_t k = 0; k < px.size(); ++k) depth_in_x[px[k].first] = k;
          std::vector<std::size_t> cycle{e};
          std::size_t meet = 0;
          for (const auto& [var, edge] : py) {
            if (auto it = depth_in_x.find(var); it != depth_in_x.end()) {
              meet = it->second;
              break;
            }
            cycle.push_back(edge);
          }
          for (std::size_t k = 0; k < meet; ++k) cycle.push_back(px[k].second);
          pr.conflict = std::move(cycle);
          return pr;
        }
      }
    }
  }
  return pr;
}

}  // namespace

std::optional<InnerProductWitness> find_inner_product_witness(const ConstraintSystem& cs) {
  for (std::size_t s = 0; s < cs.spheres; ++s) {
    if (cs.kinds[s] != SphereKind::fixed || cs.intersection(s, s) != -1) continue;
    std::size_t pivot = 0;
    for (std::size_t j = 0; j < cs.rank; ++j)
      if (cs.columns(j, s) != 0) pivot = j;

    std::vector<std::size_t> neighbours;
    for (std::size_t f = 0; f < cs.spheres; ++f)
      if (f != s && cs.kinds[f] == SphereKind::invariant && abs(cs.intersection(f, s)) == 1)
        neighbours.push_back(f);

    for (std::size_t x = 0; x < neighbours.size(); ++x) {
      for (std::size_t y = x + 1; y < neighbours.size(); ++y) {
        const std::size_t l = neighbours[x], r = neighbours[y];
        if (cs.intersection(l, r) != 0) continue;
        if (cs.columns(pivot, l) * cs.columns(pivot, r) != 1) continue;
        Integer sum = 0;
        std::optional<std::size_t> negative;
        for (std::size_t j = 0; j < cs.rank; ++j) {
          if (j == pivot) continue;
          const Integer prod = cs.columns(j, l) * cs.columns(j, r);
          sum += prod;
          if (prod < 0 && !negative) negative = j;
        }
        if (!negative) continue;
        return InnerProductWitness{s, l, r, pivot, *negative, sum};
      }
    }
  }
  return std::nullopt;
}

ObstructionVerdict decide(const ConstraintSystem& cs) {
  ObstructionVerdict verdict;

  for (const auto& c : cs.constraints) {
    if (c.source != ConstraintSource::fixed_magnitude) continue;
    verdict.status = Feasibility::infeasible;
    ObstructionCertificate cert;
    cert.cycle = {c};
    cert.text = cycle_text(cs, cert.cycle);
    verdict.certificate = std::move(cert);
    return verdict;
  }

  const Propagation pr = propagate(cs);
  const auto witness = find_inner_product_witness(cs);

  if (!pr.conflict) {
    if (witness) throw InvariantViolation("inner-product contradiction found in a satisfiable sign system");
    verdict.status = Feasibility::feasible;
    verdict.assignment = pr.value;
    if (!cs.satisfied_by(verdict.assignment)) throw InvariantViolation("propagated signs do not satisfy the system");
    return verdict;
  }

  verdict.status = Feasibility::infeasible;
  ObstructionCertificate cert;
  if (witness) {
    const auto& w = *witness;
    cert.cycle = {coefficient_constraint(cs, w.left, w.pivot), coefficient_constraint(cs, w.right, w.pivot),
                  coefficient_constraint(cs, w.right, w.negative_index),
                  coefficient_constraint(cs, w.left, w.negative_index)};
    cert.witness = w;
    cert.text = witness_text(cs, w) + "\n" + cycle_text(cs, cert.cycle);
  } else {
    for (const std::size_t e : *pr.conflict) cert.cycle.push_back(cs.constraints[e]);
    cert.text = cycle_text(cs, cert.cycle);
  }
  verdict.certificate = std::move(cert);
  return verdict;
}

Feasibility decide_exhaustive(const ConstraintSystem& cs) {
  const std::size_t vars = cs.variable_count();
  if (vars > 26) throw std::invalid_argument("exhaustive search limited to 26 sign variables");
  struct Packed {
    std::size_t u, v;
    std::uint64_t odd;
  };
  std::vector<Packed> packed;
  for (const auto& c : cs.constraints) {
    if (c.source == ConstraintSource::fixed_magnitude) return Feasibility::infeasible;
    packed.push_back({c.u, c.v, c.parity == -1 ? 1u : 0u});
  }
  // Bit k set means variable k is -1.
  const std::uint64_t total = std::uint64_t{1} << vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (const auto& c : packed) {
      if ((((mask >> c.u) ^ (mask >> c.v)) & 1u) != c.odd) {
        ok = false;
        break;
      }
    }
    if (ok) return Feasibility::feasible;
  }
  return Feasibility::infeasible;
}

bool verify_certificate(const ConstraintSystem& cs, const ObstructionCertificate& cert) {
  if (cert.cycle.empty()) return false;
  for (const auto& c : cert.cycle) {
    const bool present = std::any_of(cs.constraints.begin(), cs.constraints.end(),
                                     [&](const SignConstraint& k) { return same_constraint(k, c); });
    if (!present) return false;
    // Re-derive the equation from the integer data it cites.
    switch (c.source) {
      case ConstraintSource::fixed_coefficient:
      case ConstraintSource::invariant_coefficient:
      case ConstraintSource::fixed_magnitude:
        if (cs.columns(c.index, c.sphere) != c.coefficient || c.parity != sign(c.coefficient)) return false;
        break;
      case ConstraintSource::coupling:
        if (cs.intersection(c.sphere, c.index) != c.coefficient || c.parity != -sign(c.coefficient)) return false;
        break;
    }
  }

  if (cert.cycle.size() == 1 && cert.cycle.front().source == ConstraintSource::fixed_magnitude)
    return abs(cert.cycle.front().coefficient) >= 2;

  // Multiplying the equations of a closed walk gives prod(values^even) = 1
  // on the left, so a parity product of -1 is unsatisfiable.
  std::map<std::size_t, int> degree;
  int product = 1;
  for (const auto& c : cert.cycle) {
    if (c.source == ConstraintSource::fixed_magnitude) return false;
    ++degree[c.u];
    ++degree[c.v];
    product *= c.parity;
  }
  for (const auto& [var, deg] : degree)
    if (deg % 2 != 0) return false;
  if (product != -1) return false;

  if (cert.witness) {
    const auto& w = *cert.witness;
    if (cs.intersection(w.left, w.right) != 0) return false;
    if (cs.columns(w.pivot, w.left) * cs.columns(w.pivot, w.right) != 1) return false;
    Integer sum = 0;
    for (std::size_t j = 0; j < cs.rank; ++j)
      if (j != w.pivot) sum += cs.columns(j, w.left) * cs.columns(j, w.right);
    if (sum != w.off_pivot_sum || sum >= 0) return false;
    if (cs.columns(w.negative_index, w.left) * cs.columns(w.negative_index, w.right) >= 0) return false;
  }
  return true;
}

std::string obstruction_hypothesis() {
  return "the sphere bounds a smooth acyclic 4-manifold W in which the image of its fundamental group "
         "normally generates pi_1(W)";
}

}  // namespace brieskorn
