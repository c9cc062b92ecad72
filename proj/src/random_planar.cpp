#include "pathpair/random_planar.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

namespace pathpair {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and independent of the standard library.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

namespace {

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

std::size_t planar_edge_max(std::size_t n) {
  if (n < 2) return 0;
  if (n == 2) return 1;
  return 3 * n - 6;
}

}  // namespace

SimpleGraph random_maximal_planar(std::size_t n, Rng& rng) {
  if (n < 2) return SimpleGraph(n, {});
  if (n == 2) return SimpleGraph(2, {{0, 1}});

  using Face = std::array<Vertex, 3>;
  std::vector<Face> faces{{0, 1, 2}, {0, 1, 2}};  // inner and outer face of the triangle
  std::set<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  for (std::size_t v = 3; v < n; ++v) {
    const auto f = rng.below(faces.size());
    const Face face = faces[f];
    const auto nv = static_cast<Vertex>(v);
    faces[f] = {face[0], face[1], nv};
    faces.push_back({face[1], face[2], nv});
    faces.push_back({face[2], face[0], nv});
    for (Vertex w : face) edges.insert(Edge::canonical(w, nv));
  }

  // Flip random edges: the two faces on {x, y} with apexes p, q become faces on {p, q}.
  const std::size_t flips = n >= 4 ? 2 * n : 0;
  for (std::size_t i = 0; i < flips; ++i) {
    std::vector<Edge> list(edges.begin(), edges.end());
    const Edge e = list[rng.below(list.size())];
    std::vector<std::size_t> around;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const auto& fc = faces[f];
      bool hx = std::find(fc.begin(), fc.end(), e.u) != fc.end();
      bool hy = std::find(fc.begin(), fc.end(), e.v) != fc.end();
      if (hx && hy) around.push_back(f);
    }
    if (around.size() != 2) continue;
    auto apex = [&](const Face& fc) {
      for (Vertex w : fc) {
        if (w != e.u && w != e.v) return w;
      }
      return Vertex{-1};
    };
    const Vertex p = apex(faces[around[0]]);
    const Vertex q = apex(faces[around[1]]);
    if (p == q || edges.count(Edge::canonical(p, q))) continue;
    edges.erase(e);
    edges.insert(Edge::canonical(p, q));
    faces[around[0]] = {p, q, e.u};
    faces[around[1]] = {p, q, e.v};
  }
  return SimpleGraph(n, {edges.begin(), edges.end()});
}

SimpleGraph random_planar_graph(std::size_t n, std::size_t m, Rng& rng) {
  if (m > planar_edge_max(n)) {
    throw GraphError("no planar simple graph on " + std::to_string(n) + " vertices has " +
                     std::to_string(m) + " edges");
  }
  auto full = random_maximal_planar(n, rng);
  auto edges = full.edges();
  shuffle(edges, rng);
  edges.resize(m);
  return SimpleGraph(n, std::move(edges));
}

Multigraph random_planar_multigraph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m > 0 && n < 2) {
    throw GraphError("cannot place " + std::to_string(m) + " multiedges on " +
                     std::to_string(n) + " vertex(es) without loops");
  }
  Rng rng(seed);
  if (m == 0) return Multigraph(n, {});
  const std::size_t simple = 1 + rng.below(std::min(m, planar_edge_max(n)));
  auto base = random_planar_graph(n, simple, rng);
  std::vector<Edge> pairs = base.edges();
  while (pairs.size() < m) pairs.push_back(base.edges()[rng.below(base.edge_count())]);
  shuffle(pairs, rng);
  return Multigraph::from_pairs(n, pairs);
}

Multigraph random_multigraph(std::size_t n, std::size_t m, Rng& rng) {
  if (m > 0 && n < 2) throw GraphError("need at least two vertices for multiedges");
  std::vector<Edge> pairs;
  while (pairs.size() < m) {
    auto u = static_cast<Vertex>(rng.below(n));
    auto v = static_cast<Vertex>(rng.below(n));
    if (u != v) pairs.push_back(Edge::canonical(u, v));
  }
  return Multigraph::from_pairs(n, pairs);
}

BipartiteSample random_bipartite_planar(std::size_t n, Rng& rng) {
  if (n < 2) throw GraphError("a bipartite sample needs at least two vertices");
  std::vector<Edge> edges;
  std::vector<Vertex> a, b;
  if (rng.chance(1, 2)) {
    // Keep only the edges crossing a random bipartition of a random planar graph.
    auto base = random_planar_graph(n, rng.below(planar_edge_max(n) + 1), rng);
    std::vector<char> side(n);
    for (auto& s : side) s = static_cast<char>(rng.below(2));
    // both sides nonempty
    const auto pick = rng.below(n);
    side[pick] = 1;
    side[(pick + 1 + rng.below(n - 1)) % n] = 0;
    for (std::size_t v = 0; v < n; ++v) {
      (side[v] ? b : a).push_back(static_cast<Vertex>(v));
    }
    for (const auto& e : base.edges()) {
      if (side[e.u] != side[e.v]) edges.push_back(e);
    }
  } else {
    // Subdivide edges of a planar graph on the B side; leftover A vertices hang off
    // B vertices or stay isolated.
    const std::size_t nb = 1 + rng.below(std::max<std::size_t>(1, n / 3));
    auto hubs = random_maximal_planar(nb, rng);
    auto hub_edges = hubs.edges();
    shuffle(hub_edges, rng);
    for (std::size_t v = 0; v < nb; ++v) b.push_back(static_cast<Vertex>(v));
    auto next = static_cast<Vertex>(nb);
    for (const auto& e : hub_edges) {
      if (static_cast<std::size_t>(next) >= n) break;
      if (!rng.chance(3, 4)) continue;
      edges.push_back({e.u, next});
      edges.push_back({e.v, next});
      a.push_back(next++);
    }
    while (static_cast<std::size_t>(next) < n) {
      if (rng.chance(1, 2)) edges.push_back({static_cast<Vertex>(rng.below(nb)), next});
      a.push_back(next++);
    }
  }
  SimpleGraph g(n, std::move(edges));
  return {g, VertexSet(n, std::move(a)), VertexSet(n, std::move(b))};
}

Pairing random_full_pairing(std::size_t n, Rng& rng) {
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  shuffle(order, rng);
  std::vector<TerminalPair> pairs;
  for (std::size_t i = 0; i + 1 < n; i += 2) pairs.push_back({order[i], order[i + 1]});
  return Pairing(std::move(pairs)).canonical();
}

SimpleGraph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.chance(num, den)) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return SimpleGraph(n, std::move(edges));
}

}  // namespace pathpair
