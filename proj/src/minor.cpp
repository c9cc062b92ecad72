#include "pathpair/minor.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "pathpair/caps.hpp"

namespace pathpair {

namespace {

using Mask = std::uint64_t;

struct MinorState {
  Mask alive = 0;
  std::vector<Mask> adj;  // indexed by original vertex; only alive entries meaningful
  // Edges that may not be contracted (they must end up between branch sets).
  std::vector<Mask> frozen;

  int degree(int v) const { return std::popcount(adj[v]); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (Mask m = alive; m; m &= m - 1) twice += std::popcount(adj[std::countr_zero(m)]);
    return twice / 2;
  }

  bool is_frozen(int u, int v) const { return (frozen[u] >> v) & 1; }

  void freeze(int u, int v) {
    frozen[u] |= Mask{1} << v;
    frozen[v] |= Mask{1} << u;
  }

  void remove_vertex(int v) {
    for (Mask m = adj[v]; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      adj[w] &= ~(Mask{1} << v);
      frozen[w] &= ~(Mask{1} << v);
    }
    adj[v] = frozen[v] = 0;
    alive &= ~(Mask{1} << v);
  }

  // Merge v into u (u, v adjacent). A merged edge stays contractible if any of the
  // edges it replaces was.
  void contract(int u, int v) {
    const Mask nb = adj[v] & ~(Mask{1} << u);
    Mask open = 0;
    for (Mask m = nb; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      const bool via_v = !is_frozen(v, w);
      const bool via_u = ((adj[u] >> w) & 1) && !is_frozen(u, w);
      if (via_v || via_u) open |= Mask{1} << w;
    }
    remove_vertex(v);
    for (Mask m = nb; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      adj[w] |= Mask{1} << u;
      adj[u] |= Mask{1} << w;
      if ((open >> w) & 1) {
        frozen[w] &= ~(Mask{1} << u);
        frozen[u] &= ~(Mask{1} << w);
      } else {
        freeze(u, w);
      }
    }
  }

  std::string key() const {
    std::string k(reinterpret_cast<const char*>(&alive), sizeof alive);
    for (Mask m = alive; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      k.append(reinterpret_cast<const char*>(&adj[v]), sizeof(Mask));
      k.append(reinterpret_cast<const char*>(&frozen[v]), sizeof(Mask));
    }
    return k;
  }
};

bool has_clique(const MinorState& s, Mask candidates, std::size_t need) {
  if (need == 0) return true;
  if (static_cast<std::size_t>(std::popcount(candidates)) < need) return false;
  for (Mask m = candidates; m; m &= m - 1) {
    int v = std::countr_zero(m);
    // Only extend with later vertices to avoid revisiting the same clique.
    Mask later = m & ~(Mask{1} << v);
    if (has_clique(s, later & s.adj[v], need - 1)) return true;
  }
  return false;
}

// Every K_t model is fixed by choosing which edges lie inside branch sets, so the
// search branches on an edge: contract it, or freeze it as a non-contracted edge.
class MinorSearch {
 public:
  explicit MinorSearch(std::size_t t) : t_(t) {}

  bool run(MinorState s) {
    reduce(s);
    if (static_cast<std::size_t>(std::popcount(s.alive)) < t_) return false;
    if (s.edge_count() < t_ * (t_ - 1) / 2) return false;
    if (has_clique(s, s.alive, t_)) return true;
    auto k = s.key();
    if (failed_.count(k)) return false;

    // Branch on an unfrozen edge at a vertex of minimum degree.
    int u = -1, w = -1;
    for (Mask m = s.alive; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const Mask open = s.adj[v] & ~s.frozen[v];
      if (open && (u < 0 || s.degree(v) < s.degree(u))) {
        u = v;
        w = std::countr_zero(open);
      }
    }
    if (u < 0) {
      // nothing left to contract and no K_t subgraph
      failed_.insert(std::move(k));
      return false;
    }

    MinorState contracted = s;
    contracted.contract(u, w);
    if (run(std::move(contracted))) return true;

    MinorState kept = s;
    kept.freeze(u, w);
    if (run(std::move(kept))) return true;

    failed_.insert(std::move(k));
    return false;
  }

 private:
  // For t >= 4 a branch set of one vertex needs degree >= 3, so a vertex of degree
  // <= 1 can be dropped and a degree-2 vertex merged into a neighbour over an
  // unfrozen edge (or dropped when both of its edges are frozen).
  void reduce(MinorState& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Mask m = s.alive; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if (!((s.alive >> v) & 1)) continue;
        const int d = s.degree(v);
        if (d <= 1) {
          s.remove_vertex(v);
          changed = true;
        } else if (d == 2) {
          const Mask open = s.adj[v] & ~s.frozen[v];
          if (open) {
            s.contract(std::countr_zero(open), v);
          } else {
            s.remove_vertex(v);
          }
          changed = true;
        }
      }
    }
  }

  std::size_t t_;
  std::unordered_set<std::string> failed_;
};

bool has_cycle(const SimpleGraph& g) {
  // A forest has exactly n - c edges.
  std::vector<Vertex> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges()) {
    auto a = find(e.u), b = find(e.v);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

}  // namespace

bool has_clique_minor(const SimpleGraph& g, std::size_t t) {
  const std::size_t n = g.vertex_count();
  enforce_cap("has_clique_minor", n, kMinorVertexCap);
  if (n > 64) throw CapExceeded("has_clique_minor: bitmask search supports at most 64 vertices");
  if (t == 0) return true;
  if (t == 1) return n >= 1;
  if (t == 2) return g.edge_count() >= 1;
  if (t == 3) return has_cycle(g);

  MinorState s;
  s.adj.assign(n, 0);
  s.frozen.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) s.alive |= Mask{1} << v;
  for (const auto& e : g.edges()) {
    s.adj[e.u] |= Mask{1} << e.v;
    s.adj[e.v] |= Mask{1} << e.u;
  }
  return MinorSearch(t).run(std::move(s));
}

}  // namespace pathpair
