#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "pathpair/graph.hpp"

namespace pathpair {

/// Seeded generator with platform-independent bounded draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Maximal planar graph (3n-6 edges for n >= 3) by random face insertion followed by
/// random edge flips.
SimpleGraph random_maximal_planar(std::size_t n, Rng& rng);

/// Planar graph with exactly m edges sampled from a random triangulation.
/// Throws GraphError when m exceeds the planar maximum for n.
SimpleGraph random_planar_graph(std::size_t n, std::size_t m, Rng& rng);

/// Planar multigraph on n vertices with m multiedges: a random planar simple graph
/// with random multiplicities. Deterministic in seed. Throws GraphError when m > 0 and
/// n < 2.
Multigraph random_planar_multigraph(std::size_t n, std::size_t m, std::uint64_t seed);

/// Multigraph with m multiedges on random vertex pairs (no planarity constraint).
Multigraph random_multigraph(std::size_t n, std::size_t m, Rng& rng);

struct BipartiteSample {
  SimpleGraph graph;
  VertexSet a;
  VertexSet b;
};

/// Random bipartite planar graph on n >= 2 vertices with nonempty sides. Alternates
/// between cutting a random planar graph along a random bipartition and subdividing
/// a random planar graph on B (the subdivision vertices form A).
BipartiteSample random_bipartite_planar(std::size_t n, Rng& rng);

/// Uniformly random full pairing (one vertex left out when n is odd), canonical form.
Pairing random_full_pairing(std::size_t n, Rng& rng);

/// G(n, p) with p = num/den.
SimpleGraph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, Rng& rng);

}  // namespace pathpair
