#pragma once

#include <vector>

#include "pathpair/graph.hpp"

namespace pathpair {

/// Cyclic order of neighbours around each vertex.
using RotationSystem = std::vector<std::vector<Vertex>>;

enum class KuratowskiKind { none, k5, k33 };

struct PlanarityResult {
  bool planar = false;
  /// Combinatorial embedding; filled when planar.
  RotationSystem embedding;
  /// Edges of a K5 or K3,3 subdivision; filled when not planar.
  std::vector<Edge> kuratowski;
};

PlanarityResult is_planar(const SimpleGraph& g);

/// True when the rotation system lists each vertex's neighbours exactly once and its
/// face count satisfies Euler's formula V - E + F = 2 on every non-trivial component.
bool is_planar_embedding(const SimpleGraph& g, const RotationSystem& rotation);

/// Classifies an edge set as a subdivision of K5, of K3,3, or neither.
KuratowskiKind kuratowski_kind(std::size_t n, const std::vector<Edge>& edges);

}  // namespace pathpair
