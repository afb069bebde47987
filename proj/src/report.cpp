#include "brieskorn/report.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace brieskorn {

namespace {

std::string sigma_name(const BrieskornTriple& t) { return "Sigma" + t.to_string(); }

std::string pair_text(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::vector<std::string> build_conclusions(const AnalysisReport& r) {
  std::vector<std::string> out;
  const std::string name = sigma_name(r.triple);
  const auto R = r.seifert.r_invariant;
  if (r_invariant_obstructs_contractible(R)) {
    out.push_back("R = " + std::to_string(R) + " != -1, so " + name +
                  " does not bound a smooth contractible 4-manifold (Fintushel-Stern R-invariant).");
  } else {
    out.push_back("R = -1: the R-invariant does not rule out a smooth contractible 4-manifold bounded by " + name +
                  ".");
  }

  if (const auto* fail = std::get_if<DiagonalizationFailure>(&r.diagonalization)) {
    out.push_back("The negative definite form of the canonical resolution is not diagonal over Z (" +
                  fail->certificate + "); if " + name +
                  " bounded a smooth acyclic W, the closed manifold M u -W would contradict Donaldson's "
                  "diagonalization theorem, so no such W exists.");
  }

  if (!r.p) return out;
  const std::string ps = std::to_string(*r.p);

  if (r.verdict) {
    if (r.verdict->status == Feasibility::infeasible) {
      out.push_back("If " + obstruction_hypothesis() + ", then the free Z/" + ps + " action on " + name +
                    " does not extend to a smooth action on W: no smooth extension over any acyclic W with this "
                    "fundamental group condition (the fixed-sphere and invariant-sphere sign constraints admit "
                    "no solution).");
    } else {
      out.push_back("The fixed-sphere and invariant-sphere sign constraints for Z/" + ps +
                    " are satisfiable; the smooth-extension test is inconclusive.");
    }
  } else {
    out.push_back("The smooth-extension test for Z/" + ps + " was not run: the form is not diagonalizable.");
  }

  if (r.candidates.empty()) {
    out.push_back("No lens space L(" + ps + "; r, s) satisfies a1 a2 a3 = rs and {a1, a2, a3} = {r, s, 1} up to "
                  "sign mod " + ps + "; there is no locally linear extension with a single fixed point.");
  }
  for (const auto& c : r.candidates) {
    const std::string lens = "L(" + ps + "; " + std::to_string(c.r) + ", " + std::to_string(c.s) + ")";
    if (c.rho_match) {
      out.push_back(name + "/Z_" + ps + " and " + lens +
                    " satisfy the Kwasik-Lawson congruences and have equal rho invariants: a locally linear "
                    "extension exists with one fixed point of rotation " + pair_text(c.r, c.s) +
                    ", provided the quotient is Z[Z_" + ps + "] h-cobordant to " + lens +
                    " (the torsion unit condition is not checked).");
    } else {
      out.push_back(lens + " satisfies the Kwasik-Lawson congruences but its rho invariants differ from those of " +
                    name + "/Z_" + ps + "; it is not a model for a locally linear extension.");
    }
  }
  return out;
}

}  // namespace

AnalysisReport analyze(const BrieskornTriple& t, std::optional<int> p) {
  if (p) {
    if (*p < 2 || !is_prime(*p)) throw std::invalid_argument("p must be a prime");
    if (!standard_action_valid(t, *p)) throw std::invalid_argument("p divides a1 a2 a3");
  }
  AnalysisReport r{.triple = t, .p = p, .seifert = seifert_invariants(t)};
  r.graph = canonical_resolution(r.seifert);
  r.form = intersection_matrix(r.graph);
  r.determinant = determinant(r.form);
  r.signature = graph_signature(r.graph);
  r.diagonalization = diagonalize(UnimodularForm(r.form));

  if (p) {
    r.markup = propagate_rotations(r.graph, *p, default_seed(r.graph));
    if (const auto* d = std::get_if<Diagonalization>(&r.diagonalization)) {
      r.constraints = build_constraints(*r.markup, *d);
      r.verdict = decide(*r.constraints);
      if (r.verdict->certificate && !verify_certificate(*r.constraints, *r.verdict->certificate))
        throw InvariantViolation("obstruction certificate does not re-verify");
    }
    r.candidates = ll_extension_search(t, *p);
  }
  r.conclusions = build_conclusions(r);
  return r;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json graph_to_json(const PlumbingGraph& g) {
  Json nodes = Json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    nodes.push_back(Json{{"index", v},
                         {"weight", to_string(g.weight(v))},
                         {"branch", g.tag(v).branch},
                         {"position", g.tag(v).position}});
  }
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  Json out{{"node_count", g.size()}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  if (g.center()) out["center"] = *g.center();
  return out;
}

Json rho_to_json(const RhoTable& t) {
  Json out = Json::object();
  for (const auto& [l, v] : t.values) out[std::to_string(l)] = to_string(v);
  return out;
}

Json eta_to_json(const EtaProfile& e) {
  Json out = Json::object();
  for (const auto& [j, v] : e.values) {
    Json coeffs = Json::array();
    for (const auto& c : v.coefficients()) coeffs.push_back(to_string(c));
    out[std::to_string(j)] = std::move(coeffs);
  }
  return out;
}

Json to_json(const AnalysisReport& r) {
  Json doc;
  doc["schema_version"] = schema_version;
  doc["tool_version"] = tool_version;
  doc["input"] = Json{{"a", std::to_string(r.triple[0])},
                      {"b", std::to_string(r.triple[1])},
                      {"c", std::to_string(r.triple[2])},
                      {"p", r.p ? Json(std::to_string(*r.p)) : Json(nullptr)}};

  Json b = Json::array();
  for (auto x : r.seifert.b) b.push_back(std::to_string(x));
  doc["seifert"] = Json{{"b", std::move(b)},
                        {"delta", to_string(r.seifert.delta)},
                        {"r_invariant", std::to_string(r.seifert.r_invariant)}};

  doc["graph"] = graph_to_json(r.graph);
  doc["form"] = Json{{"matrix", matrix_to_json(r.form)},
                     {"determinant", to_string(r.determinant)},
                     {"signature", std::to_string(r.signature.signature)},
                     {"definiteness", definiteness_name(r.signature.definiteness)}};

  if (const auto* d = std::get_if<Diagonalization>(&r.diagonalization)) {
    doc["diagonalization"] = Json{{"found", true},
                                  {"root_pairs", d->c.cols()},
                                  {"c", matrix_to_json(d->c)},
                                  {"c_inv", matrix_to_json(d->c_inv)}};
  } else {
    const auto& f = std::get<DiagonalizationFailure>(r.diagonalization);
    doc["diagonalization"] = Json{{"found", false},
                                  {"root_pairs", f.root_pairs},
                                  {"required", f.required},
                                  {"certificate", f.certificate}};
  }

  if (r.markup) {
    const auto& m = *r.markup;
    Json spheres = Json::array();
    for (const std::size_t v : m.fixed_spheres()) {
      spheres.push_back(Json{{"node", v},
                             {"self_intersection", to_string(r.graph.weight(v))},
                             {"normal_rotation", std::to_string(m.nodes[v].normal_rotation)}});
    }
    Json points = Json::array();
    for (const auto& pt : m.points) {
      const auto cls = canonical_rotation_class(pt.rotation, m.p);
      points.push_back(Json{{"rotation", Json::array({std::to_string(pt.rotation.a), std::to_string(pt.rotation.b)})},
                            {"class", Json::array({std::to_string(cls.a), std::to_string(cls.b)})},
                            {"circle_weights", Json::array({to_string(pt.base_weight), to_string(pt.fiber_weight)})},
                            {"nodes", pt.nodes}});
    }
    doc["equivariant"] = Json{{"p", std::to_string(m.p)},
                              {"fixed_spheres", std::move(spheres)},
                              {"fixed_points", std::move(points)},
                              {"lefschetz_consistent", m.lefschetz_consistent()}};
  } else {
    doc["equivariant"] = nullptr;
  }

  if (r.verdict) {
    Json ob{{"status", feasibility_name(r.verdict->status)}, {"hypothesis", obstruction_hypothesis()}};
    ob["constraint_count"] = r.constraints->constraints.size();
    if (r.verdict->certificate) {
      const auto& cert = *r.verdict->certificate;
      ob["certificate"] = cert.text;
      if (cert.witness) {
        const auto& w = *cert.witness;
        ob["witness"] = Json{{"fixed_sphere", w.fixed_sphere},
                             {"invariant_spheres", Json::array({w.left, w.right})},
                             {"pivot", w.pivot},
                             {"negative_index", w.negative_index},
                             {"off_pivot_sum", to_string(w.off_pivot_sum)}};
      }
    } else {
      Json signs = Json::array();
      for (int x : r.verdict->assignment) signs.push_back(std::to_string(x));
      ob["assignment"] = std::move(signs);
    }
    doc["obstruction"] = std::move(ob);
  } else {
    doc["obstruction"] = Json{{"status", r.p ? "not-run" : "no-action"}};
  }

  if (r.p) {
    Json cands = Json::array();
    for (const auto& c : r.candidates) {
      Json members = Json::array();
      for (auto [x, y] : c.members) members.push_back(Json::array({std::to_string(x), std::to_string(y)}));
      Json residues = Json::array(), targets = Json::array(), signs = Json::array();
      for (int i = 0; i < 3; ++i) {
        residues.push_back(std::to_string(c.triple_residues[i]));
        targets.push_back(std::to_string(c.matched_target[i]));
        signs.push_back(std::to_string(c.matched_sign[i]));
      }
      cands.push_back(Json{{"r", std::to_string(c.r)},
                           {"s", std::to_string(c.s)},
                           {"members", std::move(members)},
                           {"product_residue", std::to_string(c.product_residue)},
                           {"rs_residue", std::to_string(c.rs_residue)},
                           {"triple_residues", std::move(residues)},
                           {"matched_targets", std::move(targets)},
                           {"matched_signs", std::move(signs)},
                           {"rho_match", c.rho_match},
                           {"quotient_rho", rho_to_json(c.quotient_rho)},
                           {"lens_rho", rho_to_json(c.lens_rho)}});
    }
    doc["locally_linear"] = Json{{"candidates", std::move(cands)}};
  } else {
    doc["locally_linear"] = nullptr;
  }

  doc["conclusions"] = r.conclusions;
  return doc;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << sigma_name(r.triple);
  if (r.p) out << " with Z/" << *r.p;
  out << "\n";
  out << "  seifert b = (" << r.seifert.b[0] << ", " << r.seifert.b[1] << ", " << r.seifert.b[2]
      << "), delta = " << to_string(r.seifert.delta) << ", R = " << r.seifert.r_invariant << "\n";
  out << "  graph: " << r.graph.size() << " nodes, weights";
  for (const auto& w : r.graph.weights()) out << " " << to_string(w);
  out << "\n";
  out << "  form: det = " << to_string(r.determinant) << ", signature = " << r.signature.signature << " ("
      << definiteness_name(r.signature.definiteness) << ")\n";
  if (const auto* d = std::get_if<Diagonalization>(&r.diagonalization)) {
    out << "  diagonalization: found (" << d->c.cols() << " root pairs)\n";
  } else {
    out << "  diagonalization: none (" << std::get<DiagonalizationFailure>(r.diagonalization).certificate << ")\n";
  }
  if (r.markup) {
    out << "  fixed spheres:";
    for (const std::size_t v : r.markup->fixed_spheres())
      out << " F" << v + 1 << "[" << to_string(r.graph.weight(v)) << ", c=" << r.markup->nodes[v].normal_rotation
          << "]";
    out << "\n  fixed points:";
    for (const auto& pt : r.markup->points) out << " " << pair_text(pt.rotation.a, pt.rotation.b);
    out << "\n";
  }
  if (r.verdict) {
    out << "  obstruction: " << feasibility_name(r.verdict->status) << "\n";
    if (r.verdict->certificate) {
      std::istringstream lines(r.verdict->certificate->text);
      for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
    }
  }
  if (r.p) {
    out << "  locally linear candidates:";
    if (r.candidates.empty()) out << " none";
    for (const auto& c : r.candidates)
      out << " " << pair_text(c.r, c.s) << (c.rho_match ? " [rho match]" : " [rho differs]");
    out << "\n";
  }
  out << "  conclusions:\n";
  for (const auto& c : r.conclusions) out << "  - " << c << "\n";
  return out.str();
}

namespace {

std::int64_t parse_input_integer(const Json& v, const char* field) {
  if (!v.is_string()) throw std::invalid_argument(std::string("input.") + field + " must be a string");
  const std::string s = v.get<std::string>();
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument(std::string("input.") + field + " is not an integer");
  return x;
}

}  // namespace

VerifyResult verify_report(const Json& stored) {
  VerifyResult res;
  if (!stored.is_object() || !stored.contains("input")) throw std::invalid_argument("report has no input section");
  if (stored.value("schema_version", -1) != schema_version) {
    res.ok = false;
    res.mismatches.push_back("schema_version");
    return res;
  }
  const Json& in = stored["input"];
  const BrieskornTriple t(parse_input_integer(in.at("a"), "a"), parse_input_integer(in.at("b"), "b"),
                          parse_input_integer(in.at("c"), "c"));
  std::optional<int> p;
  if (!in.at("p").is_null()) p = static_cast<int>(parse_input_integer(in.at("p"), "p"));

  const Json fresh = to_json(analyze(t, p));
  for (const auto& [key, value] : fresh.items()) {
    if (!stored.contains(key) || stored[key] != value) {
      res.ok = false;
      res.mismatches.push_back(key);
    }
  }
  for (const auto& [key, value] : stored.items())
    if (!fresh.contains(key)) {
      res.ok = false;
      res.mismatches.push_back(key);
    }
  return res;
}

ReportCache::ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

ReportCache ReportCache::from_environment() {
  if (const char* d = std::getenv("BRIESKORN_CACHE_DIR"); d && *d) return ReportCache(d);
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return ReportCache(std::filesystem::path(x) / "brieskorn");
  if (const char* h = std::getenv("HOME"); h && *h) return ReportCache(std::filesystem::path(h) / ".cache" / "brieskorn");
  return ReportCache(std::filesystem::temp_directory_path() / "brieskorn-cache");
}

std::filesystem::path ReportCache::path_for(const BrieskornTriple& t, std::optional<int> p) const {
  std::string name = "sigma_" + std::to_string(t[0]) + "_" + std::to_string(t[1]) + "_" + std::to_string(t[2]);
  name += p ? "_p" + std::to_string(*p) : std::string("_nop");
  name += "_v" + std::string(tool_version) + ".json";
  return dir_ / name;
}

std::optional<Json> ReportCache::load(const BrieskornTriple& t, std::optional<int> p) const {
  std::ifstream in(path_for(t, p));
  if (!in) return std::nullopt;
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded() || doc.value("tool_version", std::string()) != tool_version) return std::nullopt;
  return doc;
}

void ReportCache::store(const BrieskornTriple& t, std::optional<int> p, const Json& report) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  const auto target = path_for(t, p);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << report.dump(2) << "\n";
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
}

Json analyze_json(const BrieskornTriple& t, std::optional<int> p, const ReportCache* cache) {
  if (cache)
    if (auto hit = cache->load(t, p)) return *hit;
  Json doc = to_json(analyze(t, p));
  if (cache) cache->store(t, p, doc);
  return doc;
}

}  // namespace brieskorn
