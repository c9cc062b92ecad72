#pragma once

// Deliberately naive reference implementations. They share only the plain data types
// with the library and are meant for graphs of a handful of vertices.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "pathpair/graph.hpp"

namespace oracle {

using pathpair::Edge;
using pathpair::Path;
using pathpair::SimpleGraph;
using pathpair::Vertex;

using AdjMatrix = std::vector<std::vector<char>>;

inline AdjMatrix matrix(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  AdjMatrix m(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = 1;
  return m;
}

/// Every simple path from s to t.
inline std::vector<Path> all_simple_paths(const SimpleGraph& g, Vertex s, Vertex t) {
  const auto adj = matrix(g);
  const int n = static_cast<int>(g.vertex_count());
  std::vector<Path> out;
  Path cur{s};
  std::vector<char> on(n, 0);
  on[s] = 1;
  std::function<void(Vertex)> dfs = [&](Vertex v) {
    if (v == t) {
      out.push_back(cur);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (!adj[v][w] || on[w]) continue;
      on[w] = 1;
      cur.push_back(w);
      dfs(w);
      cur.pop_back();
      on[w] = 0;
    }
  };
  dfs(s);
  return out;
}

/// Tries every combination of one simple path per pair.
inline bool realizable(const SimpleGraph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<std::vector<Path>> options;
  for (auto [s, t] : pairs) options.push_back(all_simple_paths(g, s, t));
  std::set<std::pair<Vertex, Vertex>> used;
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == pairs.size()) return true;
    for (const auto& p : options[i]) {
      std::vector<std::pair<Vertex, Vertex>> mine;
      bool clash = false;
      for (std::size_t j = 0; j + 1 < p.size(); ++j) {
        auto key = std::minmax(p[j], p[j + 1]);
        if (used.count(key)) {
          clash = true;
          break;
        }
        mine.emplace_back(key.first, key.second);
      }
      if (clash) continue;
      for (auto& k : mine) used.insert(k);
      if (go(i + 1)) return true;
      for (auto& k : mine) used.erase(k);
    }
    return false;
  };
  return go(0);
}

/// Perfect matchings of the given vertex list.
inline void matchings_of(std::vector<Vertex> vs, std::vector<std::pair<Vertex, Vertex>>& acc,
                         std::vector<std::vector<std::pair<Vertex, Vertex>>>& out) {
  if (vs.empty()) {
    out.push_back(acc);
    return;
  }
  Vertex a = vs[0];
  for (std::size_t i = 1; i < vs.size(); ++i) {
    std::vector<Vertex> rest;
    for (std::size_t j = 1; j < vs.size(); ++j) {
      if (j != i) rest.push_back(vs[j]);
    }
    acc.emplace_back(a, vs[i]);
    matchings_of(rest, acc, out);
    acc.pop_back();
  }
}

inline std::vector<std::vector<std::pair<Vertex, Vertex>>> all_full_pairings(std::size_t n) {
  std::vector<Vertex> vs(n);
  for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> acc;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> out;
  matchings_of(vs, acc, out);
  return out;
}

/// Every choice of k pairs on 2k distinct vertices.
inline std::vector<std::vector<std::pair<Vertex, Vertex>>> all_k_pairings(std::size_t n,
                                                                         std::size_t k) {
  std::vector<std::vector<std::pair<Vertex, Vertex>>> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != 2 * k) continue;
    std::vector<Vertex> vs;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1U) vs.push_back(static_cast<Vertex>(v));
    }
    std::vector<std::pair<Vertex, Vertex>> acc;
    matchings_of(vs, acc, out);
  }
  return out;
}

inline bool path_pairable(const SimpleGraph& g) {
  for (const auto& p : all_full_pairings(g.vertex_count())) {
    if (!realizable(g, p)) return false;
  }
  return true;
}

inline bool k_path_pairable(const SimpleGraph& g, std::size_t k) {
  for (const auto& p : all_k_pairings(g.vertex_count(), k)) {
    if (!realizable(g, p)) return false;
  }
  return true;
}

/// Cut condition by plain subset enumeration.
inline bool cut_condition(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (2 * size > n) continue;
    std::size_t leaving = 0;
    for (const auto& e : g.edges()) {
      if (((mask >> e.u) & 1U) != ((mask >> e.v) & 1U)) ++leaving;
    }
    if (leaving < size) return false;
  }
  return true;
}

/// K_t minor by assigning each vertex to one of t branch sets or to none, then checking
/// connectivity of every branch set and adjacency of every pair. (t+1)^n assignments.
inline bool has_clique_minor(const SimpleGraph& g, std::size_t t) {
  const auto n = g.vertex_count();
  if (t == 0) return true;
  if (n < t) return false;
  const auto adj = matrix(g);
  std::vector<int> label(n, 0);  // 0 = unused, 1..t = branch set
  auto connected = [&](int set) {
    std::vector<Vertex> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (label[v] == set) members.push_back(static_cast<Vertex>(v));
    }
    if (members.empty()) return false;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{members[0]};
    seen[members[0]] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      ++count;
      for (std::size_t w = 0; w < n; ++w) {
        if (adj[v][w] && !seen[w] && label[w] == set) {
          seen[w] = 1;
          stack.push_back(static_cast<Vertex>(w));
        }
      }
    }
    return count == members.size();
  };
  std::function<bool(std::size_t)> go = [&](std::size_t v) {
    if (v == n) {
      for (std::size_t s = 1; s <= t; ++s) {
        if (!connected(static_cast<int>(s))) return false;
      }
      for (std::size_t s = 1; s <= t; ++s) {
        for (std::size_t r = s + 1; r <= t; ++r) {
          bool touch = false;
          for (std::size_t a = 0; a < n && !touch; ++a) {
            for (std::size_t b = 0; b < n && !touch; ++b) {
              touch = label[a] == static_cast<int>(s) && label[b] == static_cast<int>(r) && adj[a][b];
            }
          }
          if (!touch) return false;
        }
      }
      return true;
    }
    // Symmetry: a vertex may open at most the next unused branch set.
    int highest = 0;
    for (std::size_t w = 0; w < v; ++w) highest = std::max(highest, label[w]);
    for (int s = 0; s <= std::min<int>(highest + 1, static_cast<int>(t)); ++s) {
      label[v] = s;
      if (go(v + 1)) return true;
    }
    label[v] = 0;
    return false;
  };
  return go(0);
}

/// K3,3 minor by the same branch-set enumeration with six sets.
inline bool has_k33_minor(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  if (n < 6) return false;
  const auto adj = matrix(g);
  std::vector<int> label(n, 0);
  auto connected = [&](int set) {
    std::vector<Vertex> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (label[v] == set) members.push_back(static_cast<Vertex>(v));
    }
    if (members.empty()) return false;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{members[0]};
    seen[members[0]] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      ++count;
      for (std::size_t w = 0; w < n; ++w) {
        if (adj[v][w] && !seen[w] && label[w] == set) {
          seen[w] = 1;
          stack.push_back(static_cast<Vertex>(w));
        }
      }
    }
    return count == members.size();
  };
  auto touches = [&](int s, int r) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (label[a] == s && label[b] == r && adj[a][b]) return true;
      }
    }
    return false;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t v) {
    if (v == n) {
      for (int s = 1; s <= 6; ++s) {
        if (!connected(s)) return false;
      }
      // sets 1..3 on one side, 4..6 on the other
      for (int s = 1; s <= 3; ++s) {
        for (int r = 4; r <= 6; ++r) {
          if (!touches(s, r)) return false;
        }
      }
      return true;
    }
    for (int s = 0; s <= 6; ++s) {
      label[v] = s;
      if (go(v + 1)) return true;
    }
    label[v] = 0;
    return false;
  };
  return go(0);
}

/// Wagner: planar iff neither K5 nor K3,3 is a minor.
inline bool planar(const SimpleGraph& g) { return !oracle::has_clique_minor(g, 5) && !oracle::has_k33_minor(g); }

/// Maximum matching size by exhaustive search over edges.
inline std::size_t max_matching_size(const SimpleGraph& g) {
  const auto& edges = g.edges();
  std::vector<char> used(g.vertex_count(), 0);
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t size) {
    best = std::max(best, size);
    if (size + (edges.size() - i) <= best) return;
    for (std::size_t j = i; j < edges.size(); ++j) {
      const auto& e = edges[j];
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = 1;
      go(j + 1, size + 1);
      used[e.u] = used[e.v] = 0;
    }
  };
  go(0, 0);
  return best;
}

/// BFS distances in g; -1 when unreachable.
inline std::vector<int> bfs(const SimpleGraph& g, Vertex s) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

/// Canonical form of a small graph: lexicographically least sorted edge list over all
/// vertex permutations.
inline std::vector<Edge> canonical_form(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
  std::vector<Edge> best;
  bool first = true;
  do {
    std::vector<Edge> mapped;
    for (const auto& e : edges) mapped.push_back(Edge::canonical(perm[e.u], perm[e.v]));
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = mapped;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// All graphs on exactly n vertices with at most max_edges edges, one per
/// isomorphism class.
inline std::vector<SimpleGraph> graphs_up_to_isomorphism(std::size_t n, std::size_t max_edges) {
  std::vector<Edge> slots;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      slots.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  std::set<std::vector<Edge>> seen;
  std::vector<SimpleGraph> out;
  for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_edges) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1U) edges.push_back(slots[i]);
    }
    auto form = canonical_form(n, edges);
    if (seen.insert(form).second) out.emplace_back(n, form);
  }
  return out;
}

}  // namespace oracle
