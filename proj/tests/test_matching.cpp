#include <doctest.h>

#include "pathpair/constructions.hpp"
#include "pathpair/matching.hpp"
#include "pathpair/random_planar.hpp"
#include "support/oracles.hpp"

using namespace pathpair;

namespace {

// Even n, minimum degree >= n/2: a random graph plus enough edges to meet the bound.
SimpleGraph random_dirac(std::size_t n, Rng& rng) {
  auto g = random_graph(n, 1, 3, rng);
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    while (2 * g.degree(v) < n) {
      const auto w = static_cast<Vertex>(rng.below(n));
      if (w != v && !g.has_edge(v, w)) g = g.with_edge(v, w);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("K6 has a perfect matching") {
  auto m = extract_matching(complete(6));
  CHECK(m.size() == 3);
  CHECK(is_matching(complete(6), m));
}

TEST_CASE("is_matching rejects shared endpoints and missing edges") {
  auto k4 = complete(4);
  CHECK(is_matching(k4, {{0, 1}, {2, 3}}));
  CHECK_FALSE(is_matching(k4, {{0, 1}, {1, 2}}));
  CHECK_FALSE(is_matching(star(3), {{1, 2}}));
  CHECK(is_matching(k4, {}));
}

TEST_CASE("dirac condition") {
  CHECK(is_dirac(complete(4)));
  CHECK_FALSE(is_dirac(star(3)));
  SimpleGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(is_dirac(c4));
  SimpleGraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(is_dirac(p4));
}

TEST_CASE("dirac graphs yield perfect matchings") {
  Rng rng(8);
  for (int round = 0; round < 50; ++round) {
    const auto n = 2 * (1 + rng.below(15));
    auto g = random_dirac(n, rng);
    REQUIRE(is_dirac(g));
    auto m = extract_matching(g);
    CHECK(2 * m.size() == n);
    CHECK(is_matching(g, m));
  }
}

TEST_CASE("maximum matching size agrees with brute force") {
  Rng rng(9);
  for (int round = 0; round < 200; ++round) {
    const auto n = 1 + rng.below(10);
    auto g = random_graph(n, 1 + rng.below(3), 6, rng);
    auto m = maximum_matching(g);
    CHECK(is_matching(g, m));
    CHECK(m.size() == oracle::max_matching_size(g));
    CHECK(std::is_sorted(m.begin(), m.end()));
    auto greedy = greedy_matching(g);
    CHECK(is_matching(g, greedy));
    CHECK(2 * greedy.size() >= m.size());
    // maximality: no edge has both endpoints free
    std::vector<char> used(n, 0);
    for (auto e : greedy) used[e.u] = used[e.v] = 1;
    for (auto e : g.edges()) CHECK((used[e.u] || used[e.v]));
  }
}

TEST_CASE("density bound") {
  // n = 20, density 1/2: 95 edges; floor(delta n / 10) = 1
  CHECK(meets_density_bound(20, 95, 1));
  CHECK_FALSE(meets_density_bound(20, 95, 0));
  CHECK(meets_density_bound(20, 190, 2));
  CHECK_FALSE(meets_density_bound(20, 190, 1));
  CHECK(meets_density_bound(1, 0, 0));
  CHECK(meets_density_bound(5, 0, 0));

  Rng rng(10);
  for (int round = 0; round < 100; ++round) {
    auto g = random_graph(20, 1, 2, rng);
    auto m = extract_matching(g, MatchingMode::greedy);
    CHECK(m.size() >= 1);
    CHECK(meets_density_bound(20, g.edge_count(), m.size()));
  }
}
