#include "pathpair/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace pathpair {

namespace {

constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

std::string edge_text(Vertex a, Vertex b) {
  return std::to_string(a) + " " + std::to_string(b);
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t n, std::vector<Edge> edges) : adjacency_(n) {
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
        static_cast<std::size_t>(e.v) >= n) {
      throw GraphError("edge " + edge_text(e.u, e.v) + " has an endpoint outside 0.." +
                       std::to_string(n) + "-1");
    }
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    e = Edge::canonical(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) throw GraphError("duplicate edge " + edge_text(dup->u, dup->v));
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> SimpleGraph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  auto key = Edge::canonical(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

SimpleGraph SimpleGraph::with_edge(Vertex a, Vertex b) const {
  auto edges = edges_;
  edges.push_back({a, b});
  return SimpleGraph(vertex_count(), std::move(edges));
}

SimpleGraph SimpleGraph::without_edge(Vertex a, Vertex b) const {
  auto edges = edges_;
  auto key = Edge::canonical(a, b);
  auto it = std::find(edges.begin(), edges.end(), key);
  if (it == edges.end()) throw GraphError("no edge " + edge_text(a, b));
  edges.erase(it);
  return SimpleGraph(vertex_count(), std::move(edges));
}

// ---------------------------------------------------------------------------

VertexSet::VertexSet(std::size_t host_n, std::vector<Vertex> members)
    : members_(std::move(members)), mask_(host_n, 0) {
  for (Vertex v : members_) {
    if (v < 0 || static_cast<std::size_t>(v) >= host_n) {
      throw GraphError("vertex " + std::to_string(v) + " is not in the host graph");
    }
    if (mask_[v]) throw GraphError("vertex " + std::to_string(v) + " listed twice");
    mask_[v] = 1;
  }
  std::sort(members_.begin(), members_.end());
}

VertexSet VertexSet::all(std::size_t host_n) {
  std::vector<Vertex> m(host_n);
  for (std::size_t i = 0; i < host_n; ++i) m[i] = static_cast<Vertex>(i);
  return VertexSet(host_n, std::move(m));
}

VertexSet VertexSet::complement() const {
  std::vector<Vertex> rest;
  for (std::size_t v = 0; v < mask_.size(); ++v) {
    if (!mask_[v]) rest.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(mask_.size(), std::move(rest));
}

namespace {

void require_host(const SimpleGraph& g, const VertexSet& x) {
  if (x.host_size() != g.vertex_count()) {
    for (Vertex v : x) {
      if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
  }
}

}  // namespace

std::size_t max_degree(const SimpleGraph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::size_t edge_cut(const SimpleGraph& g, const VertexSet& x) {
  require_host(g, x);
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    if (x.contains(e.u) != x.contains(e.v)) ++count;
  }
  return count;
}

std::size_t induced_edge_count(const SimpleGraph& g, const VertexSet& x) {
  require_host(g, x);
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    if (x.contains(e.u) && x.contains(e.v)) ++count;
  }
  return count;
}

std::size_t edges_between(const SimpleGraph& g, const VertexSet& x, const VertexSet& y) {
  require_host(g, x);
  require_host(g, y);
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    if ((x.contains(e.u) && y.contains(e.v)) || (x.contains(e.v) && y.contains(e.u))) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------

Multigraph::Multigraph(std::size_t n, std::vector<Multiedge> edges)
    : edges_(std::move(edges)), adjacency_(n) {
  std::sort(edges_.begin(), edges_.end(),
            [](const Multiedge& a, const Multiedge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
        static_cast<std::size_t>(e.v) >= n) {
      throw GraphError("multiedge " + std::to_string(e.id) + " has an endpoint out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (i > 0 && edges_[i - 1].id == e.id) {
      throw GraphError("multiedge id " + std::to_string(e.id) + " used twice");
    }
    if (e.id >= index_by_id_.size()) index_by_id_.resize(e.id + 1, kAbsent);
    index_by_id_[e.id] = i;
    if (!e.is_loop()) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

Multigraph Multigraph::from_pairs(std::size_t n, std::span<const Edge> edges) {
  std::vector<Multiedge> me;
  me.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) me.push_back({edges[i].u, edges[i].v, i});
  return Multigraph(n, std::move(me));
}

Multigraph Multigraph::from_graph(const SimpleGraph& g) {
  return from_pairs(g.vertex_count(), g.edges());
}

bool Multigraph::has_edge(MultiedgeId id) const {
  return id < index_by_id_.size() && index_by_id_[id] != kAbsent;
}

const Multiedge& Multigraph::edge(MultiedgeId id) const {
  if (!has_edge(id)) throw GraphError("unknown multiedge id " + std::to_string(id));
  return edges_[index_by_id_[id]];
}

SimpleGraph Multigraph::underlying_simple() const {
  std::set<Edge> seen;
  for (const auto& e : edges_) {
    if (!e.is_loop()) seen.insert(Edge::canonical(e.u, e.v));
  }
  return SimpleGraph(vertex_count(), {seen.begin(), seen.end()});
}

namespace {

std::vector<int> bfs_distances(const Multigraph& mg, std::span<const Vertex> sources) {
  std::vector<int> dist(mg.vertex_count(), -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : mg.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

EdgeDistance multiedge_distance(const Multigraph& mg, MultiedgeId e, MultiedgeId f) {
  const auto& a = mg.edge(e);
  const auto& b = mg.edge(f);
  if (e == f) throw GraphError("multiedge distance needs two distinct multiedges");
  Vertex src[] = {a.u, a.v};
  auto dist = bfs_distances(mg, src);
  int best = -1;
  for (Vertex w : {b.u, b.v}) {
    if (dist[w] >= 0 && (best < 0 || dist[w] < best)) best = dist[w];
  }
  if (best < 0) return std::nullopt;
  return static_cast<std::size_t>(best);
}

MultiedgeDistances::MultiedgeDistances(const Multigraph& mg) : graph_(&mg) {
  dist_.reserve(mg.vertex_count());
  for (std::size_t v = 0; v < mg.vertex_count(); ++v) {
    Vertex src[] = {static_cast<Vertex>(v)};
    dist_.push_back(bfs_distances(mg, src));
  }
}

EdgeDistance MultiedgeDistances::vertex_distance(Vertex a, Vertex b) const {
  int d = dist_.at(a).at(b);
  if (d < 0) return std::nullopt;
  return static_cast<std::size_t>(d);
}

EdgeDistance MultiedgeDistances::between(MultiedgeId e, MultiedgeId f) const {
  const auto& a = graph_->edge(e);
  const auto& b = graph_->edge(f);
  int best = -1;
  for (Vertex x : {a.u, a.v}) {
    for (Vertex y : {b.u, b.v}) {
      int d = dist_[x][y];
      if (d >= 0 && (best < 0 || d < best)) best = d;
    }
  }
  if (best < 0) return std::nullopt;
  return static_cast<std::size_t>(best);
}

Contraction contract_matching(const Multigraph& mg, std::span<const MultiedgeId> matching) {
  const std::size_t n = mg.vertex_count();
  std::vector<Vertex> partner(n, -1);
  std::vector<char> contracted_id;
  for (MultiedgeId id : matching) {
    const auto& e = mg.edge(id);
    if (e.is_loop()) throw GraphError("multiedge " + std::to_string(id) + " is a loop");
    if (partner[e.u] >= 0 || partner[e.v] >= 0) {
      throw GraphError("multiedges do not form a matching (vertex reused at id " +
                       std::to_string(id) + ")");
    }
    partner[e.u] = e.v;
    partner[e.v] = e.u;
    if (id >= contracted_id.size()) contracted_id.resize(id + 1, 0);
    contracted_id[id] = 1;
  }

  // Each merged pair is represented by its smaller endpoint; ids are compacted in order.
  Contraction out;
  out.vertex_map.assign(n, -1);
  Vertex next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    Vertex p = partner[v];
    if (p >= 0 && p < static_cast<Vertex>(v)) {
      out.vertex_map[v] = out.vertex_map[p];
    } else {
      out.vertex_map[v] = next++;
    }
  }
  std::vector<Multiedge> kept;
  for (const auto& e : mg.edges()) {
    if (e.id < contracted_id.size() && contracted_id[e.id]) continue;
    kept.push_back({out.vertex_map[e.u], out.vertex_map[e.v], e.id});
  }
  for (MultiedgeId id : matching) out.merged.push_back(out.vertex_map[mg.edge(id).u]);
  out.graph = Multigraph(static_cast<std::size_t>(next), std::move(kept));
  return out;
}

// ---------------------------------------------------------------------------

Pairing::Pairing(std::vector<TerminalPair> pairs) : pairs_(std::move(pairs)) {
  std::vector<Vertex> ends;
  for (const auto& p : pairs_) {
    if (p.first < 0 || p.second < 0) throw GraphError("negative terminal id");
    ends.push_back(p.first);
    ends.push_back(p.second);
  }
  std::sort(ends.begin(), ends.end());
  auto dup = std::adjacent_find(ends.begin(), ends.end());
  if (dup != ends.end()) {
    throw GraphError("terminal " + std::to_string(*dup) + " appears in more than one pair slot");
  }
}

void Pairing::check_within(std::size_t n) const {
  for (const auto& p : pairs_) {
    for (Vertex v : {p.first, p.second}) {
      if (static_cast<std::size_t>(v) >= n) {
        throw GraphError("terminal " + std::to_string(v) + " is not a vertex");
      }
    }
  }
}

bool Pairing::is_full(std::size_t n) const { return 2 * pairs_.size() == n - (n % 2); }

Pairing Pairing::canonical() const {
  auto pairs = pairs_;
  for (auto& p : pairs) {
    if (p.first > p.second) std::swap(p.first, p.second);
  }
  std::sort(pairs.begin(), pairs.end());
  return Pairing(std::move(pairs));
}

std::optional<std::string> path_system_violation(const SimpleGraph& g, const Pairing& pairing,
                                                 const PathSystem& system) {
  if (system.paths.size() != pairing.size()) {
    return "expected " + std::to_string(pairing.size()) + " paths, got " +
           std::to_string(system.paths.size());
  }
  std::vector<int> owner(g.edge_count(), -1);
  for (std::size_t i = 0; i < system.paths.size(); ++i) {
    const auto& path = system.paths[i];
    const auto& pair = pairing[i];
    if (path.empty()) return "path " + std::to_string(i) + " is empty";
    const bool forward = path.front() == pair.first && path.back() == pair.second;
    const bool backward = path.front() == pair.second && path.back() == pair.first;
    if (!forward && !backward) {
      return "path " + std::to_string(i) + " does not join " + edge_text(pair.first, pair.second);
    }
    for (Vertex v : path) {
      if (!g.contains(v)) return "path " + std::to_string(i) + " leaves the graph";
    }
    for (std::size_t j = 1; j < path.size(); ++j) {
      auto idx = g.edge_index(path[j - 1], path[j]);
      if (!idx) {
        return "path " + std::to_string(i) + " steps along non-edge " +
               edge_text(path[j - 1], path[j]);
      }
      if (owner[*idx] == static_cast<int>(i)) {
        return "path " + std::to_string(i) + " reuses edge " + edge_text(path[j - 1], path[j]);
      }
      if (owner[*idx] >= 0) {
        return "paths " + std::to_string(owner[*idx]) + " and " + std::to_string(i) +
               " share edge " + edge_text(path[j - 1], path[j]);
      }
      owner[*idx] = static_cast<int>(i);
    }
  }
  return std::nullopt;
}

}  // namespace pathpair
