#include <doctest.h>

#include "pathpair/automorphism.hpp"
#include "pathpair/caps.hpp"
#include "pathpair/conditions.hpp"
#include "pathpair/constructions.hpp"
#include "pathpair/random_planar.hpp"
#include "pathpair/verifier.hpp"
#include "support/oracles.hpp"

using namespace pathpair;

namespace {

SimpleGraph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(Edge::canonical(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)));
  }
  return SimpleGraph(n, e);
}

bool pairable(const VerifyReport& r) { return r.verdict == PairabilityVerdict::pairable; }

}  // namespace

TEST_CASE("pairing enumeration counts and order") {
  CHECK(full_pairings(2).size() == 1);
  CHECK(full_pairings(4).size() == 3);
  CHECK(full_pairings(6).size() == 15);
  CHECK(full_pairings(8).size() == 105);
  CHECK(full_pairings(0).size() == 1);
  CHECK_THROWS_AS(full_pairings(5), GraphError);
  auto fp = full_pairings(4);
  CHECK(fp[0].pairs() == std::vector<TerminalPair>{{0, 1}, {2, 3}});
  CHECK(fp[1].pairs() == std::vector<TerminalPair>{{0, 2}, {1, 3}});
  CHECK(fp[2].pairs() == std::vector<TerminalPair>{{0, 3}, {1, 2}});
  CHECK(k_pairings(4, 1).size() == 6);
  CHECK(k_pairings(5, 2).size() == 15);
  CHECK(k_pairings(6, 2).size() == 45);
  CHECK(pairing_count(6, 2) == 45);
  CHECK(pairing_count(12, 6) == 10395);
  auto kp = k_pairings(6, 2);
  CHECK(std::is_sorted(kp.begin(), kp.end(),
                       [](const Pairing& a, const Pairing& b) { return a.pairs() < b.pairs(); }));
  CHECK_THROWS_AS(k_pairings(3, 2), GraphError);
}

TEST_CASE("C4: counterexample is the diagonal pairing") {
  auto r = is_path_pairable(cycle(4));
  CHECK(r.verdict == PairabilityVerdict::counterexample);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->pairs() == std::vector<TerminalPair>{{0, 2}, {1, 3}});
  CHECK(r.pairings_total == 3);
  CHECK(r.pairings_checked == 2);
  CHECK(cut_condition(cycle(4)).holds);
}

TEST_CASE("small pairable graphs") {
  auto k4 = is_path_pairable(complete(4));
  CHECK(pairable(k4));
  CHECK(k4.pairings_checked == 3);
  CHECK(pairable(is_path_pairable(complete(6))));
  CHECK(pairable(is_path_pairable(complete_bipartite(3, 3))));
  auto th = is_path_pairable(triangle_hub(1).graph());
  CHECK(pairable(th));
  CHECK(th.pairings_checked == 15);
}

TEST_CASE("odd n and n < 2k are rejected") {
  CHECK_THROWS_AS(is_path_pairable(complete(5)), GraphError);
  CHECK_THROWS_AS(is_k_path_pairable(complete(3), 2), GraphError);
}

TEST_CASE("k-path-pairability examples") {
  for (std::size_t k = 1; k <= 3; ++k) {
    CHECK(pairable(is_k_path_pairable(star(2 * k), k)));
  }
  CHECK_FALSE(pairable(is_k_path_pairable(cycle(4), 2)));
  CHECK(pairable(is_k_path_pairable(cycle(6), 1)));
  SimpleGraph split(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(pairable(is_k_path_pairable(split, 1)));
  CHECK(pairable(is_k_path_pairable(star(3), 2)));
  CHECK_FALSE(pairable(is_k_path_pairable(cycle(6), 3)));
}

TEST_CASE("automorphism orbits") {
  CHECK(automorphisms(cycle(4)).size() == 8);
  CHECK(automorphisms(complete(4)).size() == 24);
  CHECK(automorphism_orbits(complete(4)).representatives.size() == 1);
  auto c4 = automorphism_orbits(cycle(4));
  CHECK(c4.representatives.size() == 2);
  CHECK(c4.orbit[0] == c4.orbit[2]);
  CHECK(c4.orbit[0] != c4.orbit[1]);
  // an asymmetric graph on 6 vertices
  SimpleGraph asym(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 4}, {1, 5}});
  REQUIRE(automorphisms(asym).size() == 1);
  CHECK(automorphism_orbits(asym).representatives.size() == 15);
  auto p = Pairing({{0, 1}, {2, 3}});
  Permutation swap{1, 0, 2, 3};
  CHECK(pathpair::apply(swap, p) == p);
  Permutation rot{1, 2, 3, 0};
  CHECK(pathpair::apply(rot, p).pairs() == std::vector<TerminalPair>{{0, 3}, {1, 2}});
}

TEST_CASE("orbit reduction and thread count never change the verdict") {
  Rng rng(4);
  for (int round = 0; round < 60; ++round) {
    const auto n = 4 + 2 * rng.below(3);
    auto g = random_graph(n, 1 + rng.below(4), 5, rng);
    auto plain = is_path_pairable(g);
    VerifyOptions orbits;
    orbits.use_orbits = true;
    auto reduced = is_path_pairable(g, orbits);
    VerifyOptions threaded;
    threaded.jobs = 4;
    auto par = is_path_pairable(g, threaded);
    CHECK(plain.verdict == reduced.verdict);
    CHECK(plain.verdict == par.verdict);
    CHECK(plain.witness == par.witness);
    CHECK(plain.pairings_checked == par.pairings_checked);
    if (reduced.witness) {
      CHECK(find_disjoint_paths(g, *reduced.witness).status == SolveStatus::infeasible);
    }
  }
}

TEST_CASE("full enumeration counts every failing pairing") {
  VerifyOptions all;
  all.full_enumeration = true;
  auto r = is_path_pairable(cycle(4), all);
  CHECK(r.failing == 1);
  CHECK(r.pairings_checked == 3);
  all.use_orbits = true;
  auto ro = is_path_pairable(cycle(4), all);
  CHECK(ro.failing == 1);
  auto path4 = SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}});
  all.use_orbits = false;
  auto rp = is_path_pairable(path4, all);
  std::size_t expected = 0;
  for (const auto& p : oracle::all_full_pairings(4)) expected += oracle::realizable(path4, p) ? 0 : 1;
  CHECK(rp.failing == expected);
}

TEST_CASE("verifier matches the naive oracle on small graphs") {
  Rng rng(19);
  for (int round = 0; round < 80; ++round) {
    const auto n = 4 + 2 * rng.below(2);
    auto g = random_graph(n, 1 + rng.below(4), 5, rng);
    CHECK(pairable(is_path_pairable(g)) == oracle::path_pairable(g));
    CHECK(pairable(is_k_path_pairable(g, 2)) == oracle::k_path_pairable(g, 2));
  }
}

TEST_CASE("necessary conditions hold for every certified graph") {
  Rng rng(23);
  std::size_t certified = 0;
  for (int round = 0; round < 80; ++round) {
    const auto n = 4 + 2 * rng.below(3);
    auto g = random_graph(n, 3 + rng.below(2), 5, rng);
    if (!pairable(is_path_pairable(g))) continue;
    ++certified;
    CHECK(cut_condition(g).holds);
    CHECK(faudree_consistency(n, max_degree(g)));
  }
  CHECK(certified > 0);
}

TEST_CASE("k-path-pairable implies (k-1)-path-pairable") {
  Rng rng(29);
  for (int round = 0; round < 40; ++round) {
    auto g = random_graph(6, 1 + rng.below(4), 5, rng);
    for (std::size_t k = 2; k <= 3; ++k) {
      if (pairable(is_k_path_pairable(g, k))) CHECK(pairable(is_k_path_pairable(g, k - 1)));
    }
  }
}

TEST_CASE("pairing enumeration cap") {
  CHECK_THROWS_AS(full_pairings(20), CapExceeded);
}
