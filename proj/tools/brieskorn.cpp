// brieskorn: command-line front end.
//
// Exit codes: 0 success, 1 invalid input, 2 internal invariant violation.

#include "brieskorn/continued_fraction.hpp"
#include "brieskorn/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace brieskorn;

namespace {

constexpr int exit_invalid = 1;
constexpr int exit_invariant = 2;

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like LO..HI");
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad range bound: " + s);
    return static_cast<std::int64_t>(v);
  };
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

struct AnalyzeArgs {
  std::int64_t a = 0, b = 0, c = 0;
  std::optional<int> p;
  std::string json_path;
  bool text = false;
  bool no_cache = false;
};

int run_analyze(const AnalyzeArgs& args) {
  const BrieskornTriple t(args.a, args.b, args.c);
  const auto cache = ReportCache::from_environment();
  const Json doc = analyze_json(t, args.p, args.no_cache ? nullptr : &cache);
  if (!args.json_path.empty()) write_output(args.json_path, doc.dump(2) + "\n");
  if (args.text || args.json_path.empty()) {
    // Text is always rendered from a fresh analysis; the JSON may come from the cache.
    std::cout << to_text(analyze(t, args.p));
  }
  return 0;
}

struct FamilyArgs {
  std::string kind;
  std::int64_t r = 0;
  std::string s_range;
  std::int64_t s_step = 1;
  int sign = 1;
  std::optional<int> p;
  std::string json_path;
  bool no_cache = false;
};

int run_family(const FamilyArgs& args) {
  const FamilyKind kind = parse_family_kind(args.kind);
  const auto [lo, hi] = parse_range(args.s_range);
  if (args.s_step < 1) throw std::invalid_argument("--s-step must be positive");
  if (args.sign != 1 && args.sign != -1) throw std::invalid_argument("--sign must be 1 or -1");
  if (args.p && (*args.p < 2 || !is_prime(*args.p))) throw std::invalid_argument("p must be a prime");
  const auto cache = ReportCache::from_environment();

  Json rows = Json::array();
  std::ostringstream table;
  table << std::left << std::setw(5) << "s" << std::setw(28) << "triple" << std::setw(7) << "delta" << std::setw(5)
        << "R" << std::setw(14) << "diagonal" << std::setw(14) << "smooth" << "locally-linear\n";
  for (std::int64_t s = lo; s <= hi; s += args.s_step) {
    Json row{{"s", std::to_string(s)}};
    std::optional<BrieskornTriple> t;
    try {
      t = family(kind, args.r, s, args.sign);
    } catch (const std::invalid_argument& e) {
      row["skipped"] = e.what();
    }
    if (t && args.p && !standard_action_valid(*t, *args.p)) {
      row["skipped"] = "p divides a1 a2 a3";
      t.reset();
    }
    if (!t) {
      table << std::setw(5) << s << "skipped: " << row["skipped"].get<std::string>() << "\n";
      rows.push_back(std::move(row));
      continue;
    }
    const Json doc = analyze_json(*t, args.p, args.no_cache ? nullptr : &cache);
    const std::string smooth = doc["obstruction"]["status"].get<std::string>();
    std::string ll = "-";
    if (args.p) {
      ll = "none";
      for (const auto& c : doc["locally_linear"]["candidates"])
        if (c["rho_match"].get<bool>()) {
          ll = "(" + c["r"].get<std::string>() + "," + c["s"].get<std::string>() + ")";
          break;
        }
    }
    table << std::setw(5) << s << std::setw(28) << ("Sigma" + t->to_string()) << std::setw(7)
          << doc["seifert"]["delta"].get<std::string>() << std::setw(5)
          << doc["seifert"]["r_invariant"].get<std::string>() << std::setw(14)
          << (doc["diagonalization"]["found"].get<bool>() ? "yes" : "no") << std::setw(14) << smooth << ll << "\n";
    row["triple"] = Json::array({std::to_string((*t)[0]), std::to_string((*t)[1]), std::to_string((*t)[2])});
    row["report"] = doc;
    rows.push_back(std::move(row));
  }

  if (!args.json_path.empty()) {
    Json out{{"schema_version", schema_version},
             {"tool_version", tool_version},
             {"family", family_kind_name(kind)},
             {"r", std::to_string(args.r)},
             {"sign", std::to_string(args.sign)},
             {"s_range", args.s_range},
             {"s_step", std::to_string(args.s_step)},
             {"p", args.p ? Json(std::to_string(*args.p)) : Json(nullptr)},
             {"rows", std::move(rows)}};
    write_output(args.json_path, out.dump(2) + "\n");
  } else {
    std::cout << table.str();
  }
  return 0;
}

int run_diagonalize(const std::string& path, const std::string& json_path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  const UnimodularForm form(read_matrix_text(in));
  const auto result = diagonalize(form);
  Json doc{{"schema_version", schema_version}, {"dimension", form.dimension()}};
  std::ostringstream text;
  if (const auto* d = std::get_if<Diagonalization>(&result)) {
    doc["found"] = true;
    doc["root_pairs"] = d->c.cols();
    doc["c"] = matrix_to_json(d->c);
    doc["c_inv"] = matrix_to_json(d->c_inv);
    text << "# diagonal: " << d->c.cols() << " root pairs\n# C_inv (column i = F_i in the diagonal basis)\n";
    write_matrix_text(text, d->c_inv);
    text << "# C (column j = e_j in node coordinates)\n";
    write_matrix_text(text, d->c);
  } else {
    const auto& f = std::get<DiagonalizationFailure>(result);
    doc["found"] = false;
    doc["root_pairs"] = f.root_pairs;
    doc["certificate"] = f.certificate;
    text << "# not diagonal: " << f.certificate << "\n";
  }
  if (!json_path.empty())
    write_output(json_path, doc.dump(2) + "\n");
  else
    std::cout << text.str();
  return 0;
}

int run_rho(const std::vector<std::int64_t>& lens) {
  const int p = static_cast<int>(lens.at(0));
  const auto table = rho_lens_table(p, lens.at(1), lens.at(2));
  std::cout << "# rho(L(" << p << "; " << lens[1] << ", " << lens[2] << "), gamma_l)\n";
  std::cout << "# l  exact  cross_check_float\n";
  for (const auto& [l, v] : table.values)
    std::cout << l << " " << to_string(v) << " " << std::setprecision(12)
              << rho_lens_float(p, lens[1], lens[2], l) << "\n";
  return 0;
}

int run_eta(std::int64_t a, std::int64_t b, std::int64_t c, int p) {
  const BrieskornTriple t(a, b, c);
  const auto eta = brieskorn_eta(t, p);
  std::cout << "# eta_t(Sigma" << t.to_string() << ") at t = zeta_" << p
            << "^j, coefficients on 1, zeta, ..., zeta^" << p - 2 << "\n";
  for (const auto& [j, v] : eta.values) {
    std::cout << j << " [";
    for (std::size_t i = 0; i < v.coefficients().size(); ++i)
      std::cout << (i ? ", " : "") << to_string(v.coefficients()[i]);
    std::cout << "]\n";
  }
  std::cout << "# rho(Sigma" << t.to_string() << "/Z_" << p << ", gamma_l)\n";
  for (const auto& [l, v] : rho_from_eta(eta).values) std::cout << l << " " << to_string(v) << "\n";
  return 0;
}

int run_graph(std::int64_t a, std::int64_t b, std::int64_t c, const std::string& format) {
  const auto g = canonical_resolution(seifert_invariants(BrieskornTriple(a, b, c)));
  if (format == "dot") {
    write_dot(std::cout, g, "sigma_" + std::to_string(a) + "_" + std::to_string(b) + "_" + std::to_string(c));
  } else {
    std::cout << graph_to_json(g).dump(2) << "\n";
  }
  return 0;
}

int run_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  const Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument(path + " is not valid JSON");
  const auto res = verify_report(doc);
  if (res.ok) {
    std::cout << "ok: report matches recomputation\n";
    return 0;
  }
  std::cout << "mismatch in:";
  for (const auto& m : res.mismatches) std::cout << " " << m;
  std::cout << "\n";
  return exit_invariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brieskorn spheres, cyclic actions and their extension obstructions"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "full report for Sigma(a,b,c)");
  analyze_cmd->add_option("a", an.a)->required();
  analyze_cmd->add_option("b", an.b)->required();
  analyze_cmd->add_option("c", an.c)->required();
  analyze_cmd->add_option("--p", an.p, "prime order of the cyclic action");
  analyze_cmd->add_option("--json", an.json_path, "write the JSON report here ('-' for stdout)");
  analyze_cmd->add_flag("--text", an.text, "print the text summary (default without --json)");
  analyze_cmd->add_flag("--no-cache", an.no_cache, "bypass the result cache");

  FamilyArgs fa;
  auto* family_cmd = app.add_subcommand("family", "batch report over a family");
  family_cmd->add_option("kind", fa.kind, "casson-harer | stern | stern-shifted")->required();
  family_cmd->add_option("--r", fa.r)->required();
  family_cmd->add_option("--s-range", fa.s_range, "LO..HI")->required();
  family_cmd->add_option("--s-step", fa.s_step, "step through the s range");
  family_cmd->add_option("--sign", fa.sign, "upper (1) or lower (-1) sign of the family formula");
  family_cmd->add_option("--p", fa.p);
  family_cmd->add_option("--json", fa.json_path);
  family_cmd->add_flag("--no-cache", fa.no_cache);

  std::string matrix_path, diag_json;
  auto* diag_cmd = app.add_subcommand("diagonalize", "diagonalize a negative definite unimodular form");
  diag_cmd->add_option("--matrix", matrix_path, "whitespace-separated integer matrix, # comments")->required();
  diag_cmd->add_option("--json", diag_json);

  std::vector<std::int64_t> lens;
  auto* rho_cmd = app.add_subcommand("rho", "rho invariants of a lens space");
  rho_cmd->add_option("--lens", lens, "p r s")->required()->expected(3);

  std::int64_t ea = 0, eb = 0, ec = 0;
  int ep = 0;
  auto* eta_cmd = app.add_subcommand("eta", "equivariant eta invariant of Sigma(a,b,c)");
  eta_cmd->add_option("a", ea)->required();
  eta_cmd->add_option("b", eb)->required();
  eta_cmd->add_option("c", ec)->required();
  eta_cmd->add_option("--p", ep)->required();

  std::int64_t ga = 0, gb = 0, gc = 0;
  std::string format = "json";
  auto* graph_cmd = app.add_subcommand("graph", "canonical resolution graph");
  graph_cmd->add_option("a", ga)->required();
  graph_cmd->add_option("b", gb)->required();
  graph_cmd->add_option("c", gc)->required();
  graph_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "recompute a JSON report and compare");
  verify_cmd->add_option("file", verify_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_invalid;
  }

  try {
    if (*analyze_cmd) return run_analyze(an);
    if (*family_cmd) return run_family(fa);
    if (*diag_cmd) return run_diagonalize(matrix_path, diag_json);
    if (*rho_cmd) return run_rho(lens);
    if (*eta_cmd) return run_eta(ea, eb, ec, ep);
    if (*graph_cmd) return run_graph(ga, gb, gc, format);
    if (*verify_cmd) return run_verify(verify_path);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return exit_invariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invariant;
  }
  return 0;
}
