#include "pathpair/weak_paths.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace pathpair {

bool is_weak_path(const SimpleGraph& g, const VertexSet& a, const VertexSet& b, const Path& path) {
  if (path.empty() || !a.contains(path.front()) || !a.contains(path.back())) return false;
  std::vector<Vertex> seen = path;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  std::size_t crossings = 0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!g.has_edge(path[i - 1], path[i])) return false;
    const bool pb = b.contains(path[i - 1]);
    const bool qb = b.contains(path[i]);
    if (pb && qb) return false;
    if (pb != qb) ++crossings;
  }
  return crossings <= 2;
}

std::size_t weak_radius(const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  Rational q = Rational(4) / eps;
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt c = (num + den - 1) / den;
  return c.convert_to<std::size_t>();
}

const Path& WeakReachability::witness_for(Vertex v) const {
  const auto& m = reachable.members();
  auto it = std::lower_bound(m.begin(), m.end(), v);
  if (it == m.end() || *it != v) {
    throw GraphError("vertex " + std::to_string(v) + " is not weakly reachable");
  }
  return witness[static_cast<std::size_t>(it - m.begin())];
}

namespace {

// Removes repeated vertices from a walk, keeping its endpoints.
Path loop_erase(const Path& walk) {
  Path out;
  for (Vertex v : walk) {
    auto it = std::find(out.begin(), out.end(), v);
    if (it != out.end()) {
      out.erase(std::next(it), out.end());
    } else {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<int> distances_from(const SimpleGraph& g, Vertex x) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{x};
  dist[x] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

WeakReachability weak_reachability(const SimpleGraph& g, const VertexSet& a, const VertexSet& b,
                                   const VertexSet& u, Vertex x, std::size_t radius) {
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    if (a.contains(static_cast<Vertex>(v)) == b.contains(static_cast<Vertex>(v))) {
      throw GraphError("weak_reachability: a and b must partition the vertices");
    }
  }
  for (Vertex v : u) {
    if (!a.contains(v)) throw GraphError("weak_reachability: u must be a subset of a");
  }
  if (!a.contains(x)) throw GraphError("weak_reachability: source must lie in a");
  if (!u.contains(x)) throw GraphError("weak_reachability: source must lie in u");

  // Layer 0: in a, no cut edge used. Layer 1: on a b-vertex. Layer 2: back in a.
  constexpr int kLayers = 3;
  auto state = [&](Vertex v, int layer) { return static_cast<std::size_t>(v) * kLayers + layer; };
  std::vector<long> parent(n * kLayers, -2);  // -2 unvisited, -1 root
  std::deque<std::size_t> queue;
  parent[state(x, 0)] = -1;
  queue.push_back(state(x, 0));
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    const auto v = static_cast<Vertex>(s / kLayers);
    const int layer = static_cast<int>(s % kLayers);
    for (Vertex w : g.neighbors(v)) {
      int next_layer = -1;
      if (layer == 1) {
        if (a.contains(w)) next_layer = 2;  // b-b edges are forbidden
      } else if (a.contains(w)) {
        next_layer = layer;
      } else if (layer == 0) {
        next_layer = 1;
      }
      if (next_layer < 0) continue;
      const std::size_t t = state(w, next_layer);
      if (parent[t] != -2) continue;
      parent[t] = static_cast<long>(s);
      queue.push_back(t);
    }
  }

  auto dist = distances_from(g, x);
  WeakReachability r;
  r.source = x;
  r.radius = radius;
  std::vector<Vertex> ball, reach, both;
  for (Vertex v : u) {
    const bool near = dist[v] >= 0 && static_cast<std::size_t>(dist[v]) <= radius;
    int layer = parent[state(v, 0)] != -2 ? 0 : (parent[state(v, 2)] != -2 ? 2 : -1);
    if (near) ball.push_back(v);
    if (layer >= 0) {
      reach.push_back(v);
      Path walk;
      for (long s = static_cast<long>(state(v, layer)); s >= 0; s = parent[s]) {
        walk.push_back(static_cast<Vertex>(s / kLayers));
      }
      std::reverse(walk.begin(), walk.end());
      r.witness.push_back(loop_erase(walk));
    }
    if (near && layer >= 0) both.push_back(v);
  }
  r.ball = VertexSet(n, std::move(ball));
  r.reachable = VertexSet(n, std::move(reach));
  r.intersection = VertexSet(n, std::move(both));
  return r;
}

WeakReachability weak_reachability(const SimpleGraph& g, const VertexSet& a, const VertexSet& b,
                                   Vertex x, std::size_t radius) {
  return weak_reachability(g, a, b, a, x, radius);
}

AuxiliaryPairingGraph build_auxiliary_pairing_graph(const SimpleGraph& g, const VertexSet& a,
                                                    const VertexSet& u, std::size_t radius) {
  const VertexSet b = a.complement();
  AuxiliaryPairingGraph out;
  out.host = u.members();
  const std::size_t m = out.host.size();
  std::vector<std::vector<char>> close(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    auto reach = weak_reachability(g, a, b, u, out.host[i], radius);
    for (std::size_t j = 0; j < m; ++j) close[i][j] = reach.intersection.contains(out.host[j]);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (close[i][j] != close[j][i]) {
        throw std::logic_error("auxiliary pairing graph is not symmetric at " +
                               std::to_string(out.host[i]) + ", " + std::to_string(out.host[j]));
      }
      if (!close[i][j]) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  out.graph = SimpleGraph(m, std::move(edges));
  return out;
}

}  // namespace pathpair
