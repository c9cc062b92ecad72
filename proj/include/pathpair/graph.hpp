#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathpair {

using Vertex = int;

/// Thrown when a graph, vertex set, pairing, or path system is malformed.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unordered vertex pair, stored with u < v once canonicalized.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge canonical(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws GraphError on loops, parallel edges, or endpoints >= n.
  SimpleGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  /// Sorted lexicographically, each edge with u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;
  /// Position of {a, b} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < vertex_count(); }

  SimpleGraph with_edge(Vertex a, Vertex b) const;
  SimpleGraph without_edge(Vertex a, Vertex b) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Sorted, duplicate-free subset of the vertices of a host graph on host_n vertices.
class VertexSet {
 public:
  VertexSet() = default;
  /// Throws GraphError on duplicates or members >= host_n.
  VertexSet(std::size_t host_n, std::vector<Vertex> members);

  static VertexSet all(std::size_t host_n);
  static VertexSet empty(std::size_t host_n) { return VertexSet(host_n, {}); }

  std::size_t host_size() const { return mask_.size(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < mask_.size() && mask_[v];
  }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  VertexSet complement() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.host_size() == b.host_size() && a.members_ == b.members_;
  }

 private:
  std::vector<Vertex> members_;
  std::vector<char> mask_;
};

std::size_t max_degree(const SimpleGraph& g);
/// Number of edges with exactly one endpoint in x.
std::size_t edge_cut(const SimpleGraph& g, const VertexSet& x);
/// Number of edges with both endpoints in x.
std::size_t induced_edge_count(const SimpleGraph& g, const VertexSet& x);
/// Number of edges between disjoint sets x and y.
std::size_t edges_between(const SimpleGraph& g, const VertexSet& x, const VertexSet& y);

// ---------------------------------------------------------------------------
// Multigraphs

using MultiedgeId = std::size_t;

struct Multiedge {
  Vertex u = 0;
  Vertex v = 0;
  MultiedgeId id = 0;

  bool is_loop() const { return u == v; }
  bool touches(Vertex w) const { return u == w || v == w; }
};

/// Undirected multigraph with loops. Multiedge ids are unique and survive contraction.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::size_t n, std::vector<Multiedge> edges);
  /// Assigns ids 0..edges.size()-1 in input order.
  static Multigraph from_pairs(std::size_t n, std::span<const Edge> edges);
  static Multigraph from_graph(const SimpleGraph& g);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Multiedge>& edges() const { return edges_; }
  /// Throws GraphError for an unknown id.
  const Multiedge& edge(MultiedgeId id) const;
  bool has_edge(MultiedgeId id) const;
  /// Distinct non-loop neighbours of v, sorted.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  /// Loops dropped, parallel edges collapsed.
  SimpleGraph underlying_simple() const;

 private:
  std::vector<Multiedge> edges_;
  std::vector<std::size_t> index_by_id_;  // id -> position, npos when absent
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Distance between two multiedges: nullopt when they lie in different components.
using EdgeDistance = std::optional<std::size_t>;

/// Shortest path length between the closest endpoints of e and f; 0 means incident.
EdgeDistance multiedge_distance(const Multigraph& mg, MultiedgeId e, MultiedgeId f);

/// All-pairs multiedge distances backed by one BFS per vertex.
class MultiedgeDistances {
 public:
  explicit MultiedgeDistances(const Multigraph& mg);
  EdgeDistance between(MultiedgeId e, MultiedgeId f) const;
  EdgeDistance vertex_distance(Vertex a, Vertex b) const;

 private:
  const Multigraph* graph_;
  std::vector<std::vector<int>> dist_;  // -1 for unreachable
};

struct Contraction {
  Multigraph graph;
  /// Old vertex -> new vertex.
  std::vector<Vertex> vertex_map;
  /// New vertex of each contracted multiedge, in the order given.
  std::vector<Vertex> merged;
};

/// Contracts pairwise non-incident, non-loop multiedges. Other multiedges keep their ids;
/// parallel edges and loops created by the merge are retained.
Contraction contract_matching(const Multigraph& mg, std::span<const MultiedgeId> matching);

// ---------------------------------------------------------------------------
// Pairings and path systems

struct TerminalPair {
  Vertex first = 0;
  Vertex second = 0;
  friend auto operator<=>(const TerminalPair&, const TerminalPair&) = default;
};

/// Disjoint terminal pairs; all 2k endpoints distinct.
class Pairing {
 public:
  Pairing() = default;
  explicit Pairing(std::vector<TerminalPair> pairs);

  const std::vector<TerminalPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }
  const TerminalPair& operator[](std::size_t i) const { return pairs_[i]; }

  /// Throws GraphError if a terminal is outside 0..n-1.
  void check_within(std::size_t n) const;
  /// Covers all vertices (n even) or all but one (n odd).
  bool is_full(std::size_t n) const;
  /// Each pair ordered (min, max), pairs sorted.
  Pairing canonical() const;

  friend bool operator==(const Pairing&, const Pairing&) = default;

 private:
  std::vector<TerminalPair> pairs_;
};

using Path = std::vector<Vertex>;

struct PathSystem {
  std::vector<Path> paths;
  friend bool operator==(const PathSystem&, const PathSystem&) = default;
};

/// First violated PathSystem invariant, or nullopt when paths realize the pairing
/// with pairwise edge-disjoint paths in g. Path i may run either way between the
/// terminals of pair i.
std::optional<std::string> path_system_violation(const SimpleGraph& g, const Pairing& pairing,
                                                 const PathSystem& paths);

inline bool is_edge_disjoint_realization(const SimpleGraph& g, const Pairing& pairing,
                                         const PathSystem& paths) {
  return !path_system_violation(g, pairing, paths).has_value();
}

}  // namespace pathpair
