#pragma once

#include "pathpair/constructions.hpp"
#include "pathpair/graph.hpp"

namespace pathpair {

/// Position of a terminal pair in a triangle-hub graph; each pair falls in exactly one.
enum class RouteCase {
  hub_hub = 1,             ///< both hubs: the triangle edge
  hub_adjacent_class = 2,  ///< hub and a class vertex it is joined to: that edge
  hub_rotation = 3,        ///< hub and a class vertex it misses: via the next hub in xAB->xBC->xCA->xAB
  same_class = 4,          ///< two class vertices of one class: via one of their two common hubs
  different_class = 5,     ///< two class vertices of different classes: via their unique common hub
};

/// Which of the two common hubs a same-class pair goes through. `lower` picks the
/// smaller role name (xAB < xBC < xCA).
enum class SameClassHub { lower, upper };

/// Throws GraphError when u == v or either is not a vertex.
RouteCase classify_pair(const TriangleHubGraph& g, Vertex u, Vertex v);

/// Edge-disjoint paths of length 1 or 2 for a full pairing of g, path i oriented from
/// pair i's first terminal to its second. Throws GraphError when the pairing is not full
/// and std::logic_error if the produced system ever fails verification.
PathSystem route(const TriangleHubGraph& g, const Pairing& pairing,
                 SameClassHub choice = SameClassHub::lower);

}  // namespace pathpair
