#include <doctest.h>

#include <string>

#include "pathpair/constructions.hpp"
#include "pathpair/io.hpp"
#include "pathpair/random_planar.hpp"

using namespace pathpair;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const GraphError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse a path on three vertices") {
  auto g = parse_graph("n=3\n0 1\n1 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("parser is whitespace and comment tolerant") {
  auto g = parse_graph("# header next\n  n = 4 \n\n2\t1  # trailing\n 3 0\n");
  CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
}

TEST_CASE("parse errors carry the line number") {
  CHECK(error_of("n=3\n0 1\n0 1\n").find("line 3") != std::string::npos);
  CHECK(error_of("n=3\n0 1\n1 0\n").find("duplicate") != std::string::npos);
  CHECK(error_of("n=3\n2 2\n").find("line 2") != std::string::npos);
  CHECK(error_of("n=3\n0 3\n").find("out of range") != std::string::npos);
  CHECK(error_of("n=3\n0 x\n").find("line 2") != std::string::npos);
  CHECK(error_of("n=3\n0 1 2\n").find("line 2") != std::string::npos);
  CHECK(error_of("0 1\n").find("header") != std::string::npos);
  CHECK(error_of("").find("header") != std::string::npos);
}

TEST_CASE("emit is canonical") {
  SimpleGraph g(4, {{3, 2}, {1, 0}, {0, 2}});
  CHECK(emit_graph(g) == "n=4\n0 1\n0 2\n2 3\n");
}

TEST_CASE("round trip on random graphs") {
  Rng rng(2024);
  for (int round = 0; round < 200; ++round) {
    const auto n = 1 + rng.below(15);
    auto g = random_graph(n, rng.below(4) + 1, 4, rng);
    auto text = emit_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(emit_graph(parse_graph(text)) == text);
  }
}

TEST_CASE("role annotations survive the round trip") {
  auto th = triangle_hub(1);
  auto text = emit_graph(th.graph(), th.role_table());
  CHECK(text.find("role 3 xAB") != std::string::npos);
  auto lg = parse_labeled_graph(text);
  CHECK(lg.graph == th.graph());
  CHECK(lg.roles == th.role_table());
}

TEST_CASE("dot export") {
  SimpleGraph g(3, {{0, 1}, {1, 2}});
  CHECK(emit_dot(g) == "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
  RoleTable roles{{1, "xAB"}};
  CHECK(emit_dot(g, roles).find("1 [label=\"1:xAB\"]") != std::string::npos);
}

TEST_CASE("multigraph text keeps parallels and loops") {
  auto mg = parse_multigraph("n=2\n0 1\n1 0\n1 1\n");
  CHECK(mg.edge_count() == 3);
  CHECK(mg.edge(2).is_loop());
}

TEST_CASE("pairing and vertex list parsing") {
  auto p = parse_pairing("0 2\n# c\n1 3\n", 4);
  CHECK(p.pairs() == std::vector<TerminalPair>{{0, 2}, {1, 3}});
  CHECK(emit_pairing(p) == "0 2\n1 3\n");
  CHECK_THROWS_AS(parse_pairing("0 4\n", 4), GraphError);
  CHECK_THROWS_AS(parse_pairing("0 0\n", 4), GraphError);
  CHECK_THROWS_AS(parse_pairing("0 1\n1 2\n", 4), GraphError);
  CHECK(parse_vertex_list("3, 1 0", 4).members() == std::vector<Vertex>{0, 1, 3});
  CHECK_THROWS_AS(parse_vertex_list("4", 4), GraphError);
}

TEST_CASE("path system text") {
  PathSystem ps{{{0, 1, 2}, {3, 4}}};
  CHECK(emit_path_system(ps) == "0 1 2\n3 4\n");
}
