#pragma once

#include <cstddef>
#include <vector>

#include "pathpair/graph.hpp"

namespace pathpair {

/// perm[v] is the image of v.
using Permutation = std::vector<Vertex>;

inline constexpr std::size_t kAutomorphismGroupCap = 500'000;

/// Every automorphism of g, identity first. Throws CapExceeded when the group is
/// larger than kAutomorphismGroupCap.
std::vector<Permutation> automorphisms(const SimpleGraph& g);

/// Image of a pairing under a vertex permutation, in canonical form.
Pairing apply(const Permutation& perm, const Pairing& p);

struct PairingOrbits {
  /// The pairings partitioned, in input order.
  std::vector<Pairing> pairings;
  /// orbit[i] = orbit number of pairings[i]; orbits are numbered by first appearance.
  std::vector<std::size_t> orbit;
  /// Index of the first member of each orbit.
  std::vector<std::size_t> representatives;
};

/// Groups pairings that are images of each other under an automorphism of g.
/// Every image of an input pairing must itself be among the inputs.
PairingOrbits orbits_of(const SimpleGraph& g, std::vector<Pairing> pairings);

/// Orbit partition of all full pairings of g (n even).
PairingOrbits automorphism_orbits(const SimpleGraph& g);

}  // namespace pathpair
