#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "pathpair/graph.hpp"

namespace pathpair {

// ---------------------------------------------------------------------------
// Degree distribution in bipartite planar graphs

struct Lemma5Report {
  std::size_t n = 0;
  std::size_t a_size = 0;
  std::size_t b_size = 0;
  /// e(A, B); every edge, since the graph is bipartite between A and B.
  std::size_t cut_edges = 0;
  /// Vertices of A with degree exactly 2.
  std::size_t degree_two = 0;
  /// A' = vertices of A with degree >= 3.
  VertexSet a_prime;
  /// e(A', B)
  std::size_t a_prime_cut = 0;
  /// e(A, B) - n - 3|B|, may be negative.
  long long degree_two_bound = 0;

  bool degree_two_holds = false;   ///< degree_two >= degree_two_bound
  bool a_prime_holds = false;      ///< |A'| < 2|B|
  bool a_prime_cut_holds = false;  ///< e(A', B) < 6|B|

  bool all_hold() const { return degree_two_holds && a_prime_holds && a_prime_cut_holds; }
};

/// Throws GraphError unless a and b partition V(g), b is nonempty, no edge lies inside
/// a or b, and g is planar.
Lemma5Report lemma5_check(const SimpleGraph& g, const VertexSet& a, const VertexSet& b);

// ---------------------------------------------------------------------------
// Low/high degree partition and its migration refinement

struct DegreePartitionState {
  std::size_t threshold = 0;
  VertexSet a;
  VertexSet b;
  /// Migrations performed so far.
  std::size_t steps = 0;
  /// e(A_i, B_i)
  std::size_t cut = 0;
  /// Vertices moved from A to B, in order.
  std::vector<Vertex> migrated;
  /// cut before the first migration, then after each.
  std::vector<std::size_t> cut_history;
};

/// B = vertices of degree >= threshold, A = the rest. Throws GraphError for threshold 0.
DegreePartitionState degree_partition(const SimpleGraph& g, std::size_t threshold);

/// Smallest vertex of A with more neighbours in A than in B.
std::optional<Vertex> migratable_vertex(const SimpleGraph& g, const DegreePartitionState& s);

/// One migration step, or nullopt when the state is stable.
std::optional<DegreePartitionState> migrate_once(const SimpleGraph& g,
                                                 const DegreePartitionState& s);

/// Migrates until no vertex of A has more neighbours in A than in B. Each step raises
/// the cut by at least one; throws std::logic_error if that ever fails.
DegreePartitionState refine_partition(const SimpleGraph& g, DegreePartitionState s);

struct StarPartition {
  VertexSet a_star;
  VertexSet b_star;
  /// Vertices of A_t with at least three neighbours in A_t (moved to B*).
  VertexSet heavy;
};

/// A* = A_t minus the heavy set, B* = B_t plus it.
StarPartition star_partition(const SimpleGraph& g, const DegreePartitionState& refined);

// ---------------------------------------------------------------------------
// Bad edges

enum class BadType { type1 = 1, type2 = 2, type3 = 3, type4 = 4 };

struct BadEdgeReport {
  VertexSet a_star;
  VertexSet b_star;
  /// Vertices of A* with exactly two neighbours in B*.
  VertexSet y;
  /// Edges of each type, index 0 = Type I.
  std::array<std::vector<Edge>, 4> by_type;
  std::size_t good = 0;

  std::size_t count(BadType t) const { return by_type[static_cast<int>(t) - 1].size(); }
  std::size_t total_bad() const;
};

/// Type I: inside B*. Type II: inside A* with an endpoint whose B*-degree is not 2.
/// Type III: inside A*, both B*-degrees 2, different B*-neighbourhoods.
/// Type IV: A*-B* edge whose A* endpoint has B*-degree >= 3.
std::optional<BadType> bad_type(const SimpleGraph& g, const VertexSet& b_star, const Edge& e);

/// Throws GraphError unless a_star and b_star partition V(g).
BadEdgeReport classify_bad_edges(const SimpleGraph& g, const VertexSet& a_star,
                                 const VertexSet& b_star);

/// Splits the edges of a graph of maximum degree <= 2 into at most three matchings.
/// Throws GraphError when some vertex has degree > 2.
std::vector<std::vector<Edge>> three_matching_decomposition(const SimpleGraph& g);

/// Subgraph induced by `keep`, on the same vertex ids.
SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& keep);

// ---------------------------------------------------------------------------
// Hub multigraph

struct HubMultigraph {
  /// Vertex i stands for host vertex hub_vertex[i] (members of B* in order).
  Multigraph graph;
  std::vector<Vertex> hub_vertex;
  /// origin[id] = the Y vertex that produced multiedge id.
  std::vector<Vertex> origin;
};

/// One multiedge per y-vertex joining its two B*-neighbours. Throws GraphError when a
/// y-vertex lies in B* or has B*-degree other than 2.
HubMultigraph hub_multigraph(const SimpleGraph& g, const VertexSet& y, const VertexSet& b_star);

}  // namespace pathpair
