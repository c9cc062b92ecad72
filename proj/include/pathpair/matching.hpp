#pragma once

#include <cstddef>
#include <vector>

#include "pathpair/graph.hpp"

namespace pathpair {

using Matching = std::vector<Edge>;

/// Pairwise disjoint edges of g.
bool is_matching(const SimpleGraph& g, const Matching& m);

/// Maximum-cardinality matching (Edmonds), sorted.
Matching maximum_matching(const SimpleGraph& g);

/// Maximal matching from one pass over the edges in lexicographic order.
Matching greedy_matching(const SimpleGraph& g);

/// 10 * size >= density * n with density = e / C(n, 2), compared exactly.
bool meets_density_bound(std::size_t n, std::size_t edges, std::size_t size);

/// Minimum degree >= n/2 (the Dirac condition).
bool is_dirac(const SimpleGraph& g);

enum class MatchingMode { maximum, greedy };

/// maximum: a maximum matching, asserted perfect when n is even and g is Dirac.
/// greedy: a maximal matching, asserted to meet meets_density_bound.
/// Throws std::logic_error if an assertion fails.
Matching extract_matching(const SimpleGraph& h, MatchingMode mode = MatchingMode::maximum);

}  // namespace pathpair
