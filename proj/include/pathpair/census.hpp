#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathpair/graph.hpp"
#include "pathpair/io.hpp"
#include "pathpair/solver.hpp"
#include "pathpair/verifier.hpp"

namespace pathpair {

inline constexpr int kReportSchema = 1;

/// Exit codes shared by the CLI and the census.
enum ExitCode : int {
  kExitOk = 0,
  kExitCounterexample = 1,
  kExitUsage = 2,
  kExitCapExceeded = 3,
};

// JSON views of the core types.
nlohmann::json to_json(const Pairing& p);
nlohmann::json to_json(const PathSystem& paths);
nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const VerifyReport& r);

/// A generated graph with its family name and parameters.
struct FamilyGraph {
  std::string family;
  std::vector<std::size_t> params;
  SimpleGraph graph;
  RoleTable roles;
};

/// Builds a named family member: star m | complete t | complete-bipartite m n |
/// ktq t q | triangle-hub k. Throws std::invalid_argument on unknown names or arity.
FamilyGraph generate_family(const std::string& family, const std::vector<std::size_t>& params);

/// Expands "family:p1,p2" where each parameter may be a range "a..b".
std::vector<FamilyGraph> expand_family_spec(const std::string& spec);

struct CensusConfig {
  std::vector<std::string> families;
  /// route-all, route-random, verify-pp, cut, faudree, planar
  std::vector<std::string> checks;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultSolveBudget;
  /// Pairings per graph for route-random.
  std::size_t random_pairings = 1000;
  /// Record wall-clock time per record (makes reports run-dependent).
  bool timings = false;
};

struct CensusResult {
  nlohmann::json report;
  /// Worst outcome over all records, as an ExitCode.
  int exit_code = kExitOk;
};

/// One record per (graph, check), in input order. Failures and cap violations are
/// reported per record; only malformed family specs or unknown checks throw.
CensusResult run_census(const CensusConfig& config);

}  // namespace pathpair
