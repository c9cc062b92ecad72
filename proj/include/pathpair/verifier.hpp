#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pathpair/graph.hpp"
#include "pathpair/solver.hpp"

namespace pathpair {

/// Largest pairing list the enumerators will materialize.
inline constexpr std::size_t kPairingEnumerationCap = 3'000'000;

/// Number of pairings k_pairings(n, k) produces, saturating at SIZE_MAX.
std::size_t pairing_count(std::size_t n, std::size_t k);

/// All full pairings of 0..n-1 (n even), lexicographic on the canonical pair list.
std::vector<Pairing> full_pairings(std::size_t n);
/// All pairings of k pairs on distinct vertices of 0..n-1, lexicographic.
/// Both enumerators throw CapExceeded past kPairingEnumerationCap.
std::vector<Pairing> k_pairings(std::size_t n, std::size_t k);

enum class PairabilityVerdict { pairable, counterexample, budget_exceeded };

std::string_view verdict_name(PairabilityVerdict v);

struct VerifyOptions {
  /// Check one representative per automorphism orbit.
  bool use_orbits = false;
  /// Worker threads; the verdict does not depend on it.
  unsigned jobs = 1;
  /// Keep going after the first counterexample to count every failing pairing.
  bool full_enumeration = false;
  std::uint64_t budget = kDefaultSolveBudget;
};

struct VerifyReport {
  PairabilityVerdict verdict = PairabilityVerdict::pairable;
  /// Lexicographically smallest failing pairing (counterexample), or the first
  /// undecided one (budget_exceeded).
  std::optional<Pairing> witness;
  std::size_t pairings_total = 0;
  /// Pairings (or orbit representatives) the verdict rests on.
  std::size_t pairings_checked = 0;
  /// Orbit count when orbits were used, else 0.
  std::size_t orbits = 0;
  /// Only meaningful with full_enumeration: failing pairings (orbit members included).
  std::size_t failing = 0;
  std::size_t undecided = 0;
};

/// Every full pairing realizable by edge-disjoint paths. Throws GraphError for odd n.
VerifyReport is_path_pairable(const SimpleGraph& g, const VerifyOptions& opts = {});
/// Every choice of k pairs on 2k distinct vertices realizable. Throws GraphError if n < 2k.
VerifyReport is_k_path_pairable(const SimpleGraph& g, std::size_t k,
                                const VerifyOptions& opts = {});

/// Verifies an explicit list of pairings (used by both entry points and the census).
VerifyReport verify_pairings(const SimpleGraph& g, std::vector<Pairing> pairings,
                             const VerifyOptions& opts);

}  // namespace pathpair
