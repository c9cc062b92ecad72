#pragma once

#include <cstddef>
#include <vector>

#include "pathpair/graph.hpp"
#include "pathpair/rational.hpp"

namespace pathpair {

/// A path is weak (with respect to the partition a | b) when it starts and ends in a,
/// uses no edge inside b, and crosses between a and b at most twice.
bool is_weak_path(const SimpleGraph& g, const VertexSet& a, const VertexSet& b, const Path& path);

/// ceil(4 / eps). Throws std::invalid_argument unless 0 < eps.
std::size_t weak_radius(const Rational& eps);

struct WeakReachability {
  Vertex source = 0;
  std::size_t radius = 0;
  /// Members of U within graph distance `radius` of the source.
  VertexSet ball;
  /// Members of U joined to the source by a weak path (the source included).
  VertexSet reachable;
  /// ball ∩ reachable
  VertexSet intersection;
  /// witness[i] is a weak path from the source to reachable.members()[i].
  std::vector<Path> witness;

  const Path& witness_for(Vertex v) const;
};

/// Weak reachability from x inside u (u ⊆ a). Runs a layered search over states
/// (vertex, cut edges used) with cut count 0 in a, 1 on the single b vertex visited,
/// and 2 back in a. Throws GraphError unless a | b partitions V(g), u ⊆ a, and x ∈ u.
WeakReachability weak_reachability(const SimpleGraph& g, const VertexSet& a, const VertexSet& b,
                                   const VertexSet& u, Vertex x, std::size_t radius);
/// Same with u = a.
WeakReachability weak_reachability(const SimpleGraph& g, const VertexSet& a, const VertexSet& b,
                                   Vertex x, std::size_t radius);

struct AuxiliaryPairingGraph {
  /// Vertex i stands for host vertex host[i] (members of u in order).
  SimpleGraph graph;
  std::vector<Vertex> host;
};

/// Graph on u joining x and y whenever y is not in U_x = ball ∩ reachable of x.
/// b is the complement of a. Throws std::logic_error if the relation is not symmetric.
AuxiliaryPairingGraph build_auxiliary_pairing_graph(const SimpleGraph& g, const VertexSet& a,
                                                    const VertexSet& u, std::size_t radius);

}  // namespace pathpair
