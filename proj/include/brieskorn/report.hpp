#pragma once

// Full analysis of one Brieskorn sphere (optionally with a Z/p action) and
// its JSON / text serializations. Every mathematical value is written as an
// exact string; the only floats are fields whose name ends in "_float".

#include "brieskorn/lattice.hpp"
#include "brieskorn/obstruction.hpp"
#include "brieskorn/plumbing.hpp"
#include "brieskorn/seifert.hpp"
#include "brieskorn/spectral.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace brieskorn {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr int schema_version = 1;

struct AnalysisReport {
  BrieskornTriple triple;
  std::optional<int> p;
  SeifertData seifert;
  PlumbingGraph graph{};
  IntMatrix form{};
  Integer determinant{};
  SignatureResult signature{};
  DiagonalizationResult diagonalization{};
  std::optional<EquivariantMarkup> markup{};
  std::optional<ConstraintSystem> constraints{};
  std::optional<ObstructionVerdict> verdict{};
  std::vector<LensCandidate> candidates{};
  std::vector<std::string> conclusions{};

  bool diagonalizable() const { return std::holds_alternative<Diagonalization>(diagonalization); }
};

/// Throws std::invalid_argument for a bad triple or a p that is not a prime
/// coprime to a1 a2 a3.
AnalysisReport analyze(const BrieskornTriple& t, std::optional<int> p);

using Json = nlohmann::ordered_json;

Json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

Json graph_to_json(const PlumbingGraph& g);
Json matrix_to_json(const IntMatrix& m);
Json rho_to_json(const RhoTable& t);
Json eta_to_json(const EtaProfile& e);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> mismatches;
};

/// Recomputes the analysis named by the report's input section and compares
/// it with the stored document.
VerifyResult verify_report(const Json& stored);

/// On-disk cache of analysis JSON keyed by triple, p and tool version.
/// Directory: $BRIESKORN_CACHE_DIR, else $XDG_CACHE_HOME/brieskorn, else
/// ~/.cache/brieskorn.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path dir);
  static ReportCache from_environment();

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path path_for(const BrieskornTriple& t, std::optional<int> p) const;
  std::optional<Json> load(const BrieskornTriple& t, std::optional<int> p) const;
  /// Best effort: an unwritable directory leaves the cache empty.
  void store(const BrieskornTriple& t, std::optional<int> p, const Json& report) const;

 private:
  std::filesystem::path dir_;
};

/// analyze + to_json through the cache (skipped when cache is null).
Json analyze_json(const BrieskornTriple& t, std::optional<int> p, const ReportCache* cache);

}  // namespace brieskorn
