#include <doctest.h>

#include "pathpair/constructions.hpp"
#include "pathpair/random_planar.hpp"
#include "pathpair/solver.hpp"
#include "pathpair/verifier.hpp"
#include "support/oracles.hpp"

using namespace pathpair;

namespace {

SimpleGraph c4() { return SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

std::vector<std::pair<Vertex, Vertex>> as_pairs(const Pairing& p) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& pr : p) out.emplace_back(pr.first, pr.second);
  return out;
}

Pairing random_pairing(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<Vertex> vs(n);
  for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<Vertex>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(vs[i - 1], vs[rng.below(i)]);
  std::vector<TerminalPair> pairs;
  for (std::size_t i = 0; i < k; ++i) pairs.push_back({vs[2 * i], vs[2 * i + 1]});
  return Pairing(pairs);
}

}  // namespace

TEST_CASE("C4 diagonals are infeasible") {
  auto r = find_disjoint_paths(c4(), Pairing({{0, 2}, {1, 3}}));
  CHECK(r.status == SolveStatus::infeasible);
  CHECK(r.paths.paths.empty());
}

TEST_CASE("K4 full pairings use the direct edges") {
  for (const auto& p : full_pairings(4)) {
    auto r = find_disjoint_paths(complete(4), p);
    REQUIRE(r.status == SolveStatus::feasible);
    for (const auto& path : r.paths.paths) CHECK(path.size() == 2);
  }
}

TEST_CASE("K3,3 pairing across the sides is feasible") {
  auto g = complete_bipartite(3, 3);
  Pairing p({{0, 3}, {1, 4}, {2, 5}});
  auto r = find_disjoint_paths(g, p);
  REQUIRE(r.status == SolveStatus::feasible);
  CHECK(is_edge_disjoint_realization(g, p, r.paths));
  // same-side pairs as well
  Pairing q({{0, 1}, {2, 3}, {4, 5}});
  auto rq = find_disjoint_paths(g, q);
  REQUIRE(rq.status == SolveStatus::feasible);
  CHECK(is_edge_disjoint_realization(g, q, rq.paths));
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(find_disjoint_paths(c4(), Pairing({{0, 7}})), GraphError);
  auto empty = find_disjoint_paths(c4(), Pairing());
  CHECK(empty.status == SolveStatus::feasible);
}

TEST_CASE("residual pruning examples") {
  auto g = c4();
  EdgeMask none(g.edge_count());
  std::vector<TerminalPair> nothing;
  CHECK(residual_prune(g, none, nothing));
  std::vector<TerminalPair> diag{{1, 3}};
  CHECK(residual_prune(g, none, diag));
  // route 0-1-2: edges 01 and 12 used, the other diagonal is cut off from one side
  EdgeMask used(g.edge_count());
  used.set(*g.edge_index(0, 1));
  used.set(*g.edge_index(1, 2));
  CHECK_FALSE(residual_prune(g, used, diag));
  // a pair split across components
  SimpleGraph split(4, {{0, 1}, {2, 3}});
  std::vector<TerminalPair> across{{0, 2}};
  CHECK_FALSE(residual_prune(split, EdgeMask(split.edge_count()), across));
}

TEST_CASE("residual pruning never rejects a feasible state") {
  Rng rng(8);
  for (int round = 0; round < 300; ++round) {
    const auto n = 4 + rng.below(3);
    auto g = random_graph(n, 3, 5, rng);
    if (g.edge_count() == 0) continue;
    EdgeMask used(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (rng.chance(1, 4)) used.set(i);
    }
    std::vector<Edge> rest;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (!used.test(i)) rest.push_back(g.edges()[i]);
    }
    SimpleGraph residual(n, rest);
    auto p = random_pairing(n, 1 + rng.below(n / 2), rng);
    if (oracle::realizable(residual, as_pairs(p))) CHECK(residual_prune(g, used, p.pairs()));
  }
}

TEST_CASE("solver agrees with the naive oracle on random small graphs") {
  Rng rng(12);
  for (int round = 0; round < 400; ++round) {
    const auto n = 4 + rng.below(4);
    auto g = random_graph(n, 1 + rng.below(3), 4, rng);
    auto p = random_pairing(n, 1 + rng.below(n / 2), rng);
    auto r = find_disjoint_paths(g, p);
    REQUIRE(r.status != SolveStatus::budget_exceeded);
    CHECK((r.status == SolveStatus::feasible) == oracle::realizable(g, as_pairs(p)));
    if (r.status == SolveStatus::feasible) CHECK(is_edge_disjoint_realization(g, p, r.paths));
  }
}

TEST_CASE("determinism") {
  Rng rng(31);
  for (int round = 0; round < 50; ++round) {
    auto g = random_graph(8, 1, 2, rng);
    auto p = random_pairing(8, 4, rng);
    auto a = find_disjoint_paths(g, p);
    auto b = find_disjoint_paths(g, p);
    CHECK(a.status == b.status);
    CHECK(a.paths == b.paths);
    CHECK(a.expansions == b.expansions);
  }
}

TEST_CASE("monotonicity under edge addition") {
  Rng rng(77);
  for (int round = 0; round < 200; ++round) {
    const auto n = 5 + rng.below(3);
    auto g = random_graph(n, 2, 5, rng);
    auto p = random_pairing(n, 1 + rng.below(n / 2), rng);
    auto before = find_disjoint_paths(g, p);
    if (before.status != SolveStatus::feasible) continue;
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
      for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) {
        if (g.has_edge(u, v)) continue;
        CHECK(find_disjoint_paths(g.with_edge(u, v), p).status == SolveStatus::feasible);
      }
    }
  }
}

TEST_CASE("a tiny budget reports budget_exceeded, never a wrong verdict") {
  auto g = complete(7);
  Pairing p({{0, 1}, {2, 3}, {4, 5}});
  auto r = find_disjoint_paths(g, p, 1);
  CHECK(r.status != SolveStatus::infeasible);
  auto small = find_disjoint_paths(c4(), Pairing({{0, 2}, {1, 3}}), 0);
  CHECK(small.status != SolveStatus::feasible);
}
