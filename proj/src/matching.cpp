#include "pathpair/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace pathpair {

bool is_matching(const SimpleGraph& g, const Matching& m) {
  std::vector<char> used(g.vertex_count(), 0);
  for (const auto& e : m) {
    if (!g.has_edge(e.u, e.v) || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

Matching maximum_matching(const SimpleGraph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  using BoostVertex = boost::graph_traits<BoostGraph>::vertex_descriptor;
  BoostGraph bg(g.vertex_count());
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  std::vector<BoostVertex> mate(g.vertex_count());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);

  const auto none = boost::graph_traits<BoostGraph>::null_vertex();
  Matching out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (mate[v] != none && v < mate[v]) {
      out.push_back({static_cast<Vertex>(v), static_cast<Vertex>(mate[v])});
    }
  }
  return out;
}

Matching greedy_matching(const SimpleGraph& g) {
  std::vector<char> used(g.vertex_count(), 0);
  Matching out;
  for (const auto& e : g.edges()) {
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    out.push_back(e);
  }
  return out;
}

bool meets_density_bound(std::size_t n, std::size_t edges, std::size_t size) {
  if (n < 2) return true;
  // 10 * size >= (edges / C(n,2)) * n  <=>  10 * size * n(n-1)/2 >= edges * n
  const unsigned long long lhs = 10ULL * size * (n * (n - 1) / 2);
  const unsigned long long rhs = static_cast<unsigned long long>(edges) * n;
  return lhs >= rhs;
}

bool is_dirac(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    if (2 * g.degree(static_cast<Vertex>(v)) < n) return false;
  }
  return true;
}

Matching extract_matching(const SimpleGraph& h, MatchingMode mode) {
  const std::size_t n = h.vertex_count();
  if (mode == MatchingMode::greedy) {
    auto m = greedy_matching(h);
    if (!meets_density_bound(n, h.edge_count(), m.size())) {
      throw std::logic_error("greedy matching of size " + std::to_string(m.size()) +
                             " is below the density bound");
    }
    return m;
  }
  auto m = maximum_matching(h);
  if (n >= 2 && n % 2 == 0 && is_dirac(h) && 2 * m.size() != n) {
    throw std::logic_error("graph meets the Dirac condition but the matching is not perfect");
  }
  return m;
}

}  // namespace pathpair
