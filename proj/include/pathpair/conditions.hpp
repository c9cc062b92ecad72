#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "pathpair/graph.hpp"

namespace pathpair {

inline constexpr std::size_t kCutConditionVertexCap = 24;

struct CutConditionResult {
  bool holds = true;
  /// Smallest violating set (lexicographically first among those), when !holds.
  std::optional<VertexSet> violating;
  /// e(X, V \ X) of the violating set.
  std::size_t cut = 0;
};

/// Every X with |X| <= n/2 has at least |X| edges leaving it. Exhaustive sweep by
/// increasing |X|; throws CapExceeded above kCutConditionVertexCap vertices.
CutConditionResult cut_condition(const SimpleGraph& g);

/// n <= 2 * delta^delta, evaluated without overflow.
bool faudree_consistency(std::uint64_t n, std::uint64_t delta);

/// ceil(sqrt(n)), exact.
std::uint64_t planar_degree_floor(std::uint64_t n);

}  // namespace pathpair
