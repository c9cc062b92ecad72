#include "pathpair/planarity.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

namespace pathpair {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

bool boost_planar(std::size_t n, const std::vector<Edge>& edges) {
  BoostGraph bg(n);
  for (const auto& e : edges) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// The edge set reported by Boost can carry extra edges; strip it down to a minimal
// nonplanar subgraph, which is a Kuratowski subdivision.
std::vector<Edge> minimize_obstruction(std::size_t n, std::vector<Edge> edges) {
  for (std::size_t i = edges.size(); i-- > 0;) {
    auto without = edges;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    if (!boost_planar(n, without)) edges = std::move(without);
  }
  return edges;
}

}  // namespace

PlanarityResult is_planar(const SimpleGraph& g) {
  BoostGraph bg(g.vertex_count());
  int index = 0;
  for (const auto& e : g.edges()) {
    auto [edge, added] = boost::add_edge(e.u, e.v, bg);
    (void)added;
    boost::put(boost::edge_index, bg, edge, index++);
  }

  std::vector<std::vector<BoostEdge>> storage(boost::num_vertices(bg));
  auto embedding = boost::make_iterator_property_map(storage.begin(),
                                                     boost::get(boost::vertex_index, bg));
  std::vector<BoostEdge> witness;
  PlanarityResult result;
  result.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = embedding,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(witness));

  if (result.planar) {
    result.embedding.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      for (const auto& e : storage[v]) {
        auto a = static_cast<Vertex>(boost::source(e, bg));
        auto b = static_cast<Vertex>(boost::target(e, bg));
        result.embedding[v].push_back(a == static_cast<Vertex>(v) ? b : a);
      }
    }
  } else {
    for (const auto& e : witness) {
      result.kuratowski.push_back(Edge::canonical(static_cast<Vertex>(boost::source(e, bg)),
                                                  static_cast<Vertex>(boost::target(e, bg))));
    }
    std::sort(result.kuratowski.begin(), result.kuratowski.end());
    result.kuratowski = minimize_obstruction(g.vertex_count(), std::move(result.kuratowski));
  }
  return result;
}

bool is_planar_embedding(const SimpleGraph& g, const RotationSystem& rotation) {
  const std::size_t n = g.vertex_count();
  if (rotation.size() != n) return false;
  // position[v][w] = index of w in rotation[v]
  std::vector<std::map<Vertex, std::size_t>> position(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    auto nb = g.neighbors(static_cast<Vertex>(v));
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) return false;
    for (std::size_t i = 0; i < rotation[v].size(); ++i) position[v][rotation[v][i]] = i;
  }

  // Face tracing: dart (u, v) is followed by (v, successor of u around v).
  std::set<std::pair<Vertex, Vertex>> visited;
  std::vector<int> component(n, -1);
  std::vector<long> faces_per_component;
  int components = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    component[s] = components;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (component[w] < 0) {
          component[w] = components;
          stack.push_back(w);
        }
      }
    }
    ++components;
  }
  faces_per_component.assign(components, 0);
  for (const auto& e : g.edges()) {
    for (auto dart : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (visited.count(dart)) continue;
      ++faces_per_component[component[dart.first]];
      auto cur = dart;
      while (!visited.count(cur)) {
        visited.insert(cur);
        auto [u, v] = cur;
        const auto& around = rotation[v];
        auto next = around[(position[v].at(u) + 1) % around.size()];
        cur = {v, next};
      }
    }
  }
  std::vector<long> vertices(components, 0), edges(components, 0);
  for (std::size_t v = 0; v < n; ++v) ++vertices[component[v]];
  for (const auto& e : g.edges()) ++edges[component[e.u]];
  for (int c = 0; c < components; ++c) {
    if (edges[c] == 0) continue;
    if (vertices[c] - edges[c] + faces_per_component[c] != 2) return false;
  }
  return true;
}

KuratowskiKind kuratowski_kind(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : edges) {
    if (e.u == e.v || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n) {
      return KuratowskiKind::none;
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<Vertex> branch;
  for (std::size_t v = 0; v < n; ++v) {
    auto d = adj[v].size();
    if (d == 1) return KuratowskiKind::none;
    if (d >= 3) branch.push_back(static_cast<Vertex>(v));
  }

  // Follow each branch vertex's incident edges through degree-2 vertices.
  std::map<std::pair<Vertex, Vertex>, int> links;
  std::size_t walked = 0;
  for (Vertex b : branch) {
    for (Vertex first : adj[b]) {
      Vertex prev = b;
      Vertex cur = first;
      std::size_t steps = 1;
      while (adj[cur].size() == 2) {
        Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++steps;
        if (steps > edges.size()) return KuratowskiKind::none;
      }
      if (cur == b) return KuratowskiKind::none;  // cycle back to itself
      walked += steps;
      ++links[{std::min(b, cur), std::max(b, cur)}];
    }
  }
  // Every edge must lie on exactly one branch path (each walked twice).
  if (walked != 2 * edges.size()) return KuratowskiKind::none;
  for (const auto& [pair, count] : links) {
    if (count != 2) return KuratowskiKind::none;  // parallel branch paths
  }

  if (branch.size() == 5 && links.size() == 10) {
    for (Vertex b : branch) {
      if (adj[b].size() != 4) return KuratowskiKind::none;
    }
    return KuratowskiKind::k5;
  }
  if (branch.size() == 6 && links.size() == 9) {
    for (Vertex b : branch) {
      if (adj[b].size() != 3) return KuratowskiKind::none;
    }
    // 2-colour the branch graph.
    std::map<Vertex, int> side{{branch[0], 0}};
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [pair, count] : links) {
        auto [a, b] = pair;
        bool ha = side.count(a), hb = side.count(b);
        if (ha && hb && side[a] == side[b]) return KuratowskiKind::none;
        if (ha && !hb) side[b] = 1 - side[a], changed = true;
        if (hb && !ha) side[a] = 1 - side[b], changed = true;
      }
    }
    if (side.size() != 6) return KuratowskiKind::none;
    int left = 0;
    for (const auto& [v, s] : side) left += s == 0;
    return left == 3 ? KuratowskiKind::k33 : KuratowskiKind::none;
  }
  return KuratowskiKind::none;
}

}  // namespace pathpair
