#include <doctest.h>

#include "pathpair/constructions.hpp"

using namespace pathpair;

TEST_CASE("star") {
  auto g = star(5);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 5);
  CHECK(g.degree(0) == 5);
  CHECK_THROWS_AS(star(0), GraphError);
}

TEST_CASE("complete and complete bipartite") {
  for (std::size_t t = 0; t <= 12; ++t) {
    auto g = complete(t);
    CHECK(g.edge_count() == t * (t == 0 ? 0 : t - 1) / 2);
    if (t > 0) CHECK(max_degree(g) == t - 1);
  }
  auto k23 = complete_bipartite(2, 3);
  CHECK(k23.edge_count() == 6);
  CHECK(k23.degree(0) == 3);
  CHECK(k23.degree(4) == 2);
  CHECK_FALSE(k23.has_edge(0, 1));
  CHECK_FALSE(k23.has_edge(2, 3));
}

TEST_CASE("K_t^q shape for t, q <= 20") {
  for (std::size_t t = 1; t <= 20; ++t) {
    for (std::size_t q = 1; q <= 20; ++q) {
      auto g = k_t_q(t, q);
      CHECK(g.vertex_count() == t * q);
      CHECK(g.edge_count() == t * (t - 1) / 2 + t * (q - 1));
      if (t * q > 1) CHECK(max_degree(g) == t + q - 2);
    }
  }
  // leaves of clique vertex 1 in K_3^3
  auto g = k_t_q(3, 3);
  CHECK(g.has_edge(1, 5));
  CHECK(g.has_edge(1, 6));
  CHECK(g.degree(5) == 1);
}

TEST_CASE("triangle hub numbering and degrees") {
  auto th = triangle_hub(2);
  const auto& g = th.graph();
  CHECK(g.vertex_count() == 12);
  CHECK(th.class_members(HubRole::A) == std::vector<Vertex>{0, 1, 2});
  CHECK(th.class_members(HubRole::B) == std::vector<Vertex>{3, 4, 5});
  CHECK(th.class_members(HubRole::C) == std::vector<Vertex>{6, 7, 8});
  CHECK(th.hubs() == std::array<Vertex, 3>{9, 10, 11});
  CHECK(th.role(10) == HubRole::xBC);
  CHECK(role_name(HubRole::xCA) == "xCA");
  CHECK(is_hub(HubRole::xAB));
  CHECK_FALSE(is_hub(HubRole::C));
  // class A joins xAB and xCA only
  CHECK(g.has_edge(0, 9));
  CHECK(g.has_edge(0, 11));
  CHECK_FALSE(g.has_edge(0, 10));
  CHECK(g.has_edge(9, 10));
  CHECK(th.role_table().size() == 12);
  CHECK_THROWS_AS(triangle_hub(0), GraphError);
}

TEST_CASE("triangle hub degree formula for k = 1..50") {
  for (std::size_t k = 1; k <= 50; ++k) {
    auto th = triangle_hub(k);
    const auto& g = th.graph();
    const auto n = g.vertex_count();
    REQUIRE(n == 6 * k);
    CHECK(max_degree(g) == 4 * k);
    CHECK(3 * max_degree(g) == 2 * n);
    CHECK(g.edge_count() == 3 * 2 * (2 * k - 1) + 3);
    for (auto h : th.hubs()) CHECK(g.degree(h) == 4 * k);
    for (Vertex v = 0; v < static_cast<Vertex>(n - 3); ++v) CHECK(g.degree(v) == 2);
  }
}
