#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(PATHPAIR_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

struct Fixtures {
  Fixtures() {
    write("cli_c4.txt", "n=4\n0 1\n1 2\n2 3\n3 0\n");
    write("cli_k4.txt", "n=4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    write("cli_diag.txt", "0 2\n1 3\n");
    write("cli_bad.txt", "n=3\n0 7\n");
  }
};

const Fixtures fixtures;

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("solve --graph cli_c4.txt").code == 2);
  CHECK(run("solve --graph missing.txt --pairs cli_diag.txt").code == 2);
  CHECK(run("verify-pp --graph cli_bad.txt").code == 2);
  CHECK(run("census --family wheel:3 --checks cut").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("generate") {
  auto r = run("generate star 3");
  CHECK(r.code == 0);
  CHECK(r.out == "n=4\n0 1\n0 2\n0 3\n");
  auto dot = run("generate complete 2 --dot");
  CHECK(dot.out.rfind("graph G {", 0) == 0);
  auto th = run("generate triangle-hub 1 --json -");
  auto j = nlohmann::json::parse(th.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "generate");
}

TEST_CASE("route prints a disjoint system") {
  auto r = run("route --k 2 --pairing random:5");
  CHECK(r.code == 0);
  CHECK(r.out.find("disjoint: true") != std::string::npos);
  auto up = run("route --k 1 --pairing random:9 --case4 upper");
  CHECK(up.code == 0);
  CHECK(run("route --k 1 --pairing random:9 --case4 sideways").code == 2);
}

TEST_CASE("solve exit codes") {
  CHECK(run("solve --graph cli_c4.txt --pairs cli_diag.txt").code == 1);
  auto ok = run("solve --graph cli_k4.txt --pairs cli_diag.txt");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("status: feasible") != std::string::npos);
  CHECK(run("solve --graph cli_c4.txt --pairs cli_diag.txt --allow-counterexamples").code == 0);
}

TEST_CASE("verify-pp and json reports") {
  auto r = run("verify-pp --graph cli_c4.txt --json -");
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["verdict"] == "counterexample");
  CHECK(j["witness"] == nlohmann::json::parse("[[0,2],[1,3]]"));
  CHECK(run("verify-pp --graph cli_k4.txt --orbits").code == 0);
  CHECK(run("verify-pp --graph cli_c4.txt --k 1").code == 0);

  CHECK(run("verify-pp --graph cli_k4.txt --json cli_report.json").code == 0);
  std::ifstream f("cli_report.json");
  auto file = nlohmann::json::parse(f);
  CHECK(file["verdict"] == "pairable");
}

TEST_CASE("caps exit 3") {
  write("cli_star.txt", run("generate star 24").out);
  CHECK(run("check --graph cli_star.txt --conditions cut").code == 3);
  CHECK(run("check --graph cli_star.txt --conditions planar,faudree").code == 0);
  CHECK(run("check --graph cli_star.txt --conditions cut", "PATHPAIR_CAP_OVERRIDE=40").code == 0);
  write("cli_thin.txt", "n=3\n0 1\n");
  CHECK(run("check --graph cli_thin.txt --conditions faudree").code == 1);
}

TEST_CASE("lemma lab") {
  auto r = run("lemma fact1 --k-range 2..64");
  CHECK(r.code == 0);
  CHECK(r.out.find("k=2 holds (equality)") != std::string::npos);
  CHECK(run("lemma nonsense").code == 2);
}

TEST_CASE("census") {
  auto r = run("census --family triangle-hub:1..2 --checks route-all,verify-pp --json -");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["records"].size() == 4);
  CHECK(run("census --family complete-bipartite:2,2 --checks verify-pp,cut").code == 1);
  CHECK(run("census --checks cut").code == 0);
  auto a = run("census --family triangle-hub:1..3 --checks route-random --seed 4 --json -");
  auto b = run("census --family triangle-hub:1..3 --checks route-random --seed 4 --jobs 3 --json -");
  CHECK(a.out == b.out);
}
