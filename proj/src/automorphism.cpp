#include "pathpair/automorphism.hpp"

#include <algorithm>
#include <map>

#include "pathpair/caps.hpp"
#include "pathpair/verifier.hpp"

namespace pathpair {

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const SimpleGraph& g)
      : g_(g), n_(g.vertex_count()), adj_(n_, std::vector<char>(n_, 0)),
        image_(n_, -1), taken_(n_, 0) {
    for (const auto& e : g.edges()) adj_[e.u][e.v] = adj_[e.v][e.u] = 1;
  }

  std::vector<Permutation> run() {
    assign(0);
    return std::move(found_);
  }

 private:
  void assign(std::size_t v) {
    if (v == n_) {
      found_.push_back(image_);
      if (found_.size() > effective_cap(kAutomorphismGroupCap)) {
        throw CapExceeded("automorphism group exceeds " +
                          std::to_string(effective_cap(kAutomorphismGroupCap)) + " elements");
      }
      return;
    }
    for (std::size_t w = 0; w < n_; ++w) {
      if (taken_[w] || g_.degree(static_cast<Vertex>(w)) != g_.degree(static_cast<Vertex>(v))) {
        continue;
      }
      bool consistent = true;
      for (std::size_t u = 0; u < v && consistent; ++u) {
        consistent = adj_[u][v] == adj_[image_[u]][w];
      }
      if (!consistent) continue;
      image_[v] = static_cast<Vertex>(w);
      taken_[w] = 1;
      assign(v + 1);
      taken_[w] = 0;
    }
    image_[v] = -1;
  }

  const SimpleGraph& g_;
  std::size_t n_;
  std::vector<std::vector<char>> adj_;
  Permutation image_;
  std::vector<char> taken_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<Permutation> automorphisms(const SimpleGraph& g) {
  // Identity comes first because candidates are tried in increasing order.
  return AutomorphismSearch(g).run();
}

Pairing apply(const Permutation& perm, const Pairing& p) {
  std::vector<TerminalPair> pairs;
  pairs.reserve(p.size());
  for (const auto& [a, b] : p) pairs.push_back({perm[a], perm[b]});
  return Pairing(std::move(pairs)).canonical();
}

PairingOrbits orbits_of(const SimpleGraph& g, std::vector<Pairing> pairings) {
  auto group = automorphisms(g);
  PairingOrbits out;
  std::map<std::vector<TerminalPair>, std::size_t> index;
  for (std::size_t i = 0; i < pairings.size(); ++i) index[pairings[i].canonical().pairs()] = i;

  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  out.orbit.assign(pairings.size(), kUnassigned);
  for (std::size_t i = 0; i < pairings.size(); ++i) {
    if (out.orbit[i] != kUnassigned) continue;
    const std::size_t id = out.representatives.size();
    out.representatives.push_back(i);
    for (const auto& perm : group) {
      auto it = index.find(pathpair::apply(perm, pairings[i]).pairs());
      if (it == index.end()) {
        throw GraphError("pairing list is not closed under automorphisms");
      }
      out.orbit[it->second] = id;
    }
  }
  out.pairings = std::move(pairings);
  return out;
}

PairingOrbits automorphism_orbits(const SimpleGraph& g) {
  return orbits_of(g, full_pairings(g.vertex_count()));
}

}  // namespace pathpair
