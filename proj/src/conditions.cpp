#include "pathpair/conditions.hpp"

#include <bit>
#include <cmath>
#include <vector>

#include "pathpair/caps.hpp"

namespace pathpair {

CutConditionResult cut_condition(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  enforce_cap("cut_condition", n, kCutConditionVertexCap);
  if (n > 63) throw CapExceeded("cut_condition: bitmask sweep supports at most 63 vertices");

  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }

  CutConditionResult result;
  std::vector<std::size_t> chosen;
  // Lexicographic combinations of each size; returns true on the first violation.
  auto sweep = [&](auto&& self, std::size_t start, std::size_t size, std::uint64_t mask) -> bool {
    if (chosen.size() == size) {
      std::size_t cut = 0;
      for (std::size_t v : chosen) cut += static_cast<std::size_t>(std::popcount(adj[v] & ~mask));
      if (cut < size) {
        result.holds = false;
        result.cut = cut;
        std::vector<Vertex> members(chosen.begin(), chosen.end());
        result.violating = VertexSet(n, std::move(members));
        return true;
      }
      return false;
    }
    for (std::size_t v = start; v + (size - chosen.size()) <= n; ++v) {
      chosen.push_back(v);
      if (self(self, v + 1, size, mask | (std::uint64_t{1} << v))) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size <= n / 2; ++size) {
    if (sweep(sweep, 0, size, 0)) break;
  }
  return result;
}

bool faudree_consistency(std::uint64_t n, std::uint64_t delta) {
  if (delta == 0) return n == 0;
  // Multiply up to delta^delta but stop once 2 * power >= n.
  unsigned __int128 power = 1;
  for (std::uint64_t i = 0; i < delta; ++i) {
    power *= delta;
    if (2 * power >= n) return true;
  }
  return 2 * power >= n;
}

std::uint64_t planar_degree_floor(std::uint64_t n) {
  using Wide = unsigned __int128;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (Wide{r} * r > n) --r;
  while (Wide{r + 1} * (r + 1) <= n) ++r;
  return Wide{r} * r == n ? r : r + 1;
}

}  // namespace pathpair
