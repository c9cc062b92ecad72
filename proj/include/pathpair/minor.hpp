#pragma once

#include <cstddef>

#include "pathpair/graph.hpp"

namespace pathpair {

inline constexpr std::size_t kMinorVertexCap = 15;

/// True iff g has a K_t minor. Exhaustive edge deletion/contraction search with
/// memoized failures; throws CapExceeded above kMinorVertexCap vertices (64 hard limit).
bool has_clique_minor(const SimpleGraph& g, std::size_t t);

}  // namespace pathpair
