#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pathpair/graph.hpp"

namespace pathpair {

/// Set of edge indices (positions in SimpleGraph::edges()).
class EdgeMask {
 public:
  EdgeMask() = default;
  explicit EdgeMask(std::size_t edge_count) : words_((edge_count + 63) / 64, 0) {}

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

enum class SolveStatus { feasible, infeasible, budget_exceeded };

std::string_view status_name(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  /// Filled when feasible; indexed like the pairing.
  PathSystem paths;
  /// Node expansions spent (one per candidate path tried).
  std::uint64_t expansions = 0;
};

inline constexpr std::uint64_t kDefaultSolveBudget = 5'000'000;

/// Exact edge-disjoint paths search. Deterministic: identical inputs and budget give
/// identical verdicts and witnesses. Throws GraphError on a pairing outside g.
SolveResult find_disjoint_paths(const SimpleGraph& g, const Pairing& pairing,
                                std::uint64_t budget = kDefaultSolveBudget);

/// False only if the remaining pairs provably cannot be routed in the residual graph
/// (edges not in `used`): a pair is disconnected, or some sampled vertex set has more
/// pairs with exactly one terminal inside than residual edges leaving it.
bool residual_prune(const SimpleGraph& g, const EdgeMask& used,
                    std::span<const TerminalPair> remaining);

}  // namespace pathpair
