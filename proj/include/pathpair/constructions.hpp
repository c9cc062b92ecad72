#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "pathpair/graph.hpp"
#include "pathpair/io.hpp"

namespace pathpair {

/// K_{1,m}; vertex 0 is the centre. Throws GraphError for m = 0.
SimpleGraph star(std::size_t m);
SimpleGraph complete(std::size_t t);
/// Parts 0..m-1 and m..m+n-1.
SimpleGraph complete_bipartite(std::size_t m, std::size_t n);
/// K_t with q-1 pendant leaves on every clique vertex. Clique vertices are 0..t-1;
/// the leaves of clique vertex i are t + i(q-1) .. t + (i+1)(q-1) - 1.
SimpleGraph k_t_q(std::size_t t, std::size_t q);

enum class HubRole { A, B, C, xAB, xBC, xCA };

std::string_view role_name(HubRole r);
bool is_hub(HubRole r);

/// Three classes A, B, C of 2k-1 degree-2 vertices and a triangle of hubs, each hub
/// joined to the two classes in its name. n = 6k, hub degree 4k.
///
/// Numbering: A = [0, 2k-1), B = [2k-1, 4k-2), C = [4k-2, 6k-3), then xAB, xBC, xCA.
class TriangleHubGraph {
 public:
  /// Throws GraphError for k = 0.
  explicit TriangleHubGraph(std::size_t k);

  std::size_t k() const { return k_; }
  const SimpleGraph& graph() const { return graph_; }
  HubRole role(Vertex v) const { return roles_.at(v); }
  Vertex hub(HubRole r) const;
  /// xAB, xBC, xCA in that order.
  std::array<Vertex, 3> hubs() const;
  std::vector<Vertex> class_members(HubRole cls) const;
  RoleTable role_table() const;

 private:
  std::size_t k_;
  SimpleGraph graph_;
  std::vector<HubRole> roles_;
};

inline TriangleHubGraph triangle_hub(std::size_t k) { return TriangleHubGraph(k); }

}  // namespace pathpair
