#include "pathpair/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "pathpair/planarity.hpp"

namespace pathpair {

namespace {

void require_partition(const SimpleGraph& g, const VertexSet& a, const VertexSet& b,
                       const char* what) {
  if (a.host_size() != g.vertex_count() || b.host_size() != g.vertex_count()) {
    throw GraphError(std::string(what) + ": vertex sets belong to a different host graph");
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const bool in_a = a.contains(static_cast<Vertex>(v));
    const bool in_b = b.contains(static_cast<Vertex>(v));
    if (in_a == in_b) {
      throw GraphError(std::string(what) + ": sets do not partition the vertices (vertex " +
                       std::to_string(v) + ")");
    }
  }
}

std::size_t neighbours_in(const SimpleGraph& g, Vertex v, const VertexSet& s) {
  std::size_t count = 0;
  for (Vertex w : g.neighbors(v)) count += s.contains(w);
  return count;
}

}  // namespace

Lemma5Report lemma5_check(const SimpleGraph& g, const VertexSet& a, const VertexSet& b) {
  require_partition(g, a, b, "lemma5_check");
  if (b.empty()) throw GraphError("lemma5_check: B must be nonempty");
  for (const auto& e : g.edges()) {
    if (a.contains(e.u) == a.contains(e.v)) {
      throw GraphError("lemma5_check: edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                       " lies inside one side; graph is not bipartite between A and B");
    }
  }
  if (!is_planar(g).planar) throw GraphError("lemma5_check: graph is not planar");

  Lemma5Report r;
  r.n = g.vertex_count();
  r.a_size = a.size();
  r.b_size = b.size();
  r.cut_edges = g.edge_count();
  std::vector<Vertex> heavy;
  for (Vertex v : a) {
    const auto d = g.degree(v);
    if (d == 2) ++r.degree_two;
    if (d >= 3) {
      heavy.push_back(v);
      r.a_prime_cut += d;
    }
  }
  r.a_prime = VertexSet(g.vertex_count(), std::move(heavy));
  r.degree_two_bound = static_cast<long long>(r.cut_edges) - static_cast<long long>(r.n) -
                       3 * static_cast<long long>(r.b_size);
  r.degree_two_holds = static_cast<long long>(r.degree_two) >= r.degree_two_bound;
  r.a_prime_holds = r.a_prime.size() < 2 * r.b_size;
  r.a_prime_cut_holds = r.a_prime_cut < 6 * r.b_size;
  return r;
}

// ---------------------------------------------------------------------------

DegreePartitionState degree_partition(const SimpleGraph& g, std::size_t threshold) {
  if (threshold == 0) throw GraphError("degree threshold must be at least 1");
  std::vector<Vertex> low, high;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    (g.degree(static_cast<Vertex>(v)) >= threshold ? high : low).push_back(static_cast<Vertex>(v));
  }
  DegreePartitionState s;
  s.threshold = threshold;
  s.a = VertexSet(g.vertex_count(), std::move(low));
  s.b = VertexSet(g.vertex_count(), std::move(high));
  s.cut = edge_cut(g, s.a);
  s.cut_history.push_back(s.cut);
  return s;
}

std::optional<Vertex> migratable_vertex(const SimpleGraph& g, const DegreePartitionState& s) {
  for (Vertex v : s.a) {
    if (neighbours_in(g, v, s.a) > neighbours_in(g, v, s.b)) return v;
  }
  return std::nullopt;
}

std::optional<DegreePartitionState> migrate_once(const SimpleGraph& g,
                                                 const DegreePartitionState& s) {
  auto v = migratable_vertex(g, s);
  if (!v) return std::nullopt;
  DegreePartitionState next = s;
  std::vector<Vertex> a, b = s.b.members();
  for (Vertex w : s.a) {
    if (w != *v) a.push_back(w);
  }
  b.push_back(*v);
  next.a = VertexSet(g.vertex_count(), std::move(a));
  next.b = VertexSet(g.vertex_count(), std::move(b));
  next.steps = s.steps + 1;
  next.cut = edge_cut(g, next.a);
  next.migrated.push_back(*v);
  next.cut_history.push_back(next.cut);
  if (next.cut < s.cut + 1) {
    throw std::logic_error("migration of vertex " + std::to_string(*v) +
                           " did not increase the cut");
  }
  return next;
}

DegreePartitionState refine_partition(const SimpleGraph& g, DegreePartitionState s) {
  while (auto next = migrate_once(g, s)) s = std::move(*next);
  return s;
}

StarPartition star_partition(const SimpleGraph& g, const DegreePartitionState& refined) {
  std::vector<Vertex> heavy, a_star;
  for (Vertex v : refined.a) {
    (neighbours_in(g, v, refined.a) >= 3 ? heavy : a_star).push_back(v);
  }
  std::vector<Vertex> b_star = refined.b.members();
  b_star.insert(b_star.end(), heavy.begin(), heavy.end());
  StarPartition out;
  out.a_star = VertexSet(g.vertex_count(), std::move(a_star));
  out.b_star = VertexSet(g.vertex_count(), std::move(b_star));
  out.heavy = VertexSet(g.vertex_count(), std::move(heavy));
  return out;
}

// ---------------------------------------------------------------------------

std::size_t BadEdgeReport::total_bad() const {
  std::size_t total = 0;
  for (const auto& list : by_type) total += list.size();
  return total;
}

namespace {

std::vector<Vertex> neighbourhood_in(const SimpleGraph& g, Vertex v, const VertexSet& s) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v)) {
    if (s.contains(w)) out.push_back(w);
  }
  return out;
}

}  // namespace

std::optional<BadType> bad_type(const SimpleGraph& g, const VertexSet& b_star, const Edge& e) {
  const bool ub = b_star.contains(e.u);
  const bool vb = b_star.contains(e.v);
  if (ub && vb) return BadType::type1;
  if (!ub && !vb) {
    const auto nu = neighbourhood_in(g, e.u, b_star);
    const auto nv = neighbourhood_in(g, e.v, b_star);
    if (nu.size() != 2 || nv.size() != 2) return BadType::type2;
    if (nu != nv) return BadType::type3;
    return std::nullopt;
  }
  const Vertex a_end = ub ? e.v : e.u;
  if (neighbours_in(g, a_end, b_star) >= 3) return BadType::type4;
  return std::nullopt;
}

BadEdgeReport classify_bad_edges(const SimpleGraph& g, const VertexSet& a_star,
                                 const VertexSet& b_star) {
  require_partition(g, a_star, b_star, "classify_bad_edges");
  BadEdgeReport r;
  r.a_star = a_star;
  r.b_star = b_star;
  std::vector<Vertex> y;
  for (Vertex v : a_star) {
    if (neighbours_in(g, v, b_star) == 2) y.push_back(v);
  }
  r.y = VertexSet(g.vertex_count(), std::move(y));
  for (const auto& e : g.edges()) {
    if (auto t = bad_type(g, b_star, e)) {
      r.by_type[static_cast<int>(*t) - 1].push_back(e);
    } else {
      ++r.good;
    }
  }
  return r;
}

std::vector<std::vector<Edge>> three_matching_decomposition(const SimpleGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) > 2) {
      throw GraphError("three_matching_decomposition needs maximum degree <= 2");
    }
  }
  std::vector<std::vector<Edge>> colour(3);
  std::vector<char> seen(g.vertex_count(), 0);
  // Walk each path from an endpoint and each cycle from its smallest vertex.
  auto walk = [&](Vertex start) {
    std::vector<Vertex> order{start};
    seen[start] = 1;
    Vertex prev = -1, cur = start;
    for (;;) {
      Vertex next = -1;
      for (Vertex w : g.neighbors(cur)) {
        if (w != prev && !seen[w]) {
          next = w;
          break;
        }
      }
      if (next < 0) break;
      seen[next] = 1;
      order.push_back(next);
      prev = cur;
      cur = next;
    }
    const bool cycle = order.size() >= 3 && g.has_edge(order.front(), order.back());
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      colour[i % 2].push_back(Edge::canonical(order[i], order[i + 1]));
    }
    if (cycle) {
      // Even cycles alternate; odd cycles need a third colour for the closing edge.
      colour[order.size() % 2 == 0 ? 1 : 2].push_back(Edge::canonical(order.back(), order.front()));
    }
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v] && g.degree(static_cast<Vertex>(v)) <= 1) walk(static_cast<Vertex>(v));
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) walk(static_cast<Vertex>(v));
  }
  while (!colour.empty() && colour.back().empty()) colour.pop_back();
  for (auto& c : colour) std::sort(c.begin(), c.end());
  return colour;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& keep) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (keep.contains(e.u) && keep.contains(e.v)) edges.push_back(e);
  }
  return SimpleGraph(g.vertex_count(), std::move(edges));
}

// ---------------------------------------------------------------------------

HubMultigraph hub_multigraph(const SimpleGraph& g, const VertexSet& y, const VertexSet& b_star) {
  HubMultigraph out;
  out.hub_vertex = b_star.members();
  std::vector<Vertex> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < out.hub_vertex.size(); ++i) {
    local[out.hub_vertex[i]] = static_cast<Vertex>(i);
  }
  std::vector<Multiedge> edges;
  for (Vertex v : y) {
    if (b_star.contains(v)) {
      throw GraphError("hub_multigraph: y-vertex " + std::to_string(v) + " lies in B*");
    }
    auto nb = neighbourhood_in(g, v, b_star);
    if (nb.size() != 2) {
      throw GraphError("hub_multigraph: y-vertex " + std::to_string(v) + " has " +
                       std::to_string(nb.size()) + " neighbours in B*, expected 2");
    }
    edges.push_back({local[nb[0]], local[nb[1]], out.origin.size()});
    out.origin.push_back(v);
  }
  out.graph = Multigraph(out.hub_vertex.size(), std::move(edges));
  return out;
}

}  // namespace pathpair
