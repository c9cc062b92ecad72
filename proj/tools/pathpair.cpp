// pathpair: command-line front end for the generators, router, solver, verifier,
// condition checkers, lemma lab, and census.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathpair/caps.hpp"
#include "pathpair/census.hpp"
#include "pathpair/conditions.hpp"
#include "pathpair/constructions.hpp"
#include "pathpair/hub_router.hpp"
#include "pathpair/io.hpp"
#include "pathpair/matching.hpp"
#include "pathpair/minor.hpp"
#include "pathpair/multiedge_lemmas.hpp"
#include "pathpair/partition.hpp"
#include "pathpair/planarity.hpp"
#include "pathpair/random_planar.hpp"
#include "pathpair/rational.hpp"
#include "pathpair/solver.hpp"
#include "pathpair/verifier.hpp"
#include "pathpair/weak_paths.hpp"

using nlohmann::json;
using namespace pathpair;

namespace {

// Human-readable output; moves to stderr when the JSON report goes to stdout.
std::ostream* text_stream = &std::cout;
std::ostream& text_out() { return *text_stream; }

struct Common {
  std::string json_path;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultSolveBudget;
  bool allow_counterexamples = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--json", c.json_path, "Write a JSON report here ('-' for stdout)");
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", c.budget, "Solver expansion budget per pairing");
  cmd->add_flag("--allow-counterexamples", c.allow_counterexamples,
                "Exit 0 when a counterexample is found");
}

void write_json(const Common& c, json report, const std::string& command) {
  if (c.json_path.empty()) return;
  json out = {{"schema", kReportSchema}, {"command", command}};
  out.update(report);
  const auto text = out.dump(2) + "\n";
  if (c.json_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(c.json_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + c.json_path);
  f << text;
}

int counterexample_exit(const Common& c) { return c.allow_counterexamples ? kExitOk : kExitCounterexample; }

LabeledGraph load_graph(const std::string& path) { return parse_labeled_graph(read_file(path)); }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::vector<std::size_t> params;
  bool dot = false;
};

int run_generate(const GenerateArgs& a, const Common& c) {
  auto fg = generate_family(a.family, a.params);
  text_out() << (a.dot ? emit_dot(fg.graph, fg.roles) : emit_graph(fg.graph, fg.roles));
  write_json(c,
             {{"family", fg.family}, {"params", fg.params}, {"graph", emit_graph(fg.graph, fg.roles)}},
             "generate");
  return kExitOk;
}

struct RouteArgs {
  std::size_t k = 1;
  std::string pairing;
  std::string case4 = "lower";
};

int run_route(const RouteArgs& a, const Common& c) {
  TriangleHubGraph th(a.k);
  const auto n = th.graph().vertex_count();
  Pairing p;
  if (a.pairing.rfind("random:", 0) == 0) {
    Rng rng(std::stoull(a.pairing.substr(7)));
    p = random_full_pairing(n, rng);
  } else {
    p = parse_pairing(read_file(a.pairing), n);
  }
  const auto choice = a.case4 == "upper" ? SameClassHub::upper : SameClassHub::lower;
  auto paths = route(th, p, choice);
  const bool ok = is_edge_disjoint_realization(th.graph(), p, paths);
  text_out() << emit_path_system(paths) << "disjoint: " << (ok ? "true" : "false") << '\n';
  json cases = json::array();
  for (const auto& pr : p) cases.push_back(static_cast<int>(classify_pair(th, pr.first, pr.second)));
  write_json(c,
             {{"graph", emit_graph(th.graph(), th.role_table())},
              {"pairing", to_json(p)},
              {"cases", cases},
              {"paths", to_json(paths)},
              {"disjoint", ok}},
             "route");
  return ok ? kExitOk : kExitCounterexample;
}

struct SolveArgs {
  std::string graph;
  std::string pairs;
};

int run_solve(const SolveArgs& a, const Common& c) {
  auto lg = load_graph(a.graph);
  auto p = parse_pairing(read_file(a.pairs), lg.graph.vertex_count());
  auto result = find_disjoint_paths(lg.graph, p, c.budget);
  text_out() << "status: " << status_name(result.status) << '\n';
  if (result.status == SolveStatus::feasible) text_out() << emit_path_system(result.paths);
  text_out() << "expansions: " << result.expansions << '\n';
  json report = {{"graph", emit_graph(lg.graph, lg.roles)},
                 {"pairing", to_json(p)},
                 {"status", status_name(result.status)},
                 {"expansions", result.expansions},
                 {"budget", c.budget},
                 {"exhausted", result.status == SolveStatus::budget_exceeded}};
  report["paths"] = result.status == SolveStatus::feasible ? to_json(result.paths) : json(nullptr);
  write_json(c, report, "solve");
  switch (result.status) {
    case SolveStatus::feasible: return kExitOk;
    case SolveStatus::infeasible: return counterexample_exit(c);
    case SolveStatus::budget_exceeded: return kExitCapExceeded;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string graph;
  std::optional<std::size_t> k;
  bool orbits = false;
  bool all = false;
};

int run_verify(const VerifyArgs& a, const Common& c) {
  auto lg = load_graph(a.graph);
  VerifyOptions opts;
  opts.use_orbits = a.orbits;
  opts.jobs = c.jobs;
  opts.full_enumeration = a.all;
  opts.budget = c.budget;
  auto report = a.k ? is_k_path_pairable(lg.graph, *a.k, opts) : is_path_pairable(lg.graph, opts);
  text_out() << "verdict: " << verdict_name(report.verdict) << '\n'
            << "pairings: " << report.pairings_checked << " of " << report.pairings_total << '\n';
  if (a.orbits) text_out() << "orbits: " << report.orbits << '\n';
  if (a.all) text_out() << "failing: " << report.failing << '\n';
  if (report.witness) text_out() << "witness:\n" << emit_pairing(*report.witness);
  json out = to_json(report);
  out["graph"] = emit_graph(lg.graph, lg.roles);
  out["k"] = a.k ? json(*a.k) : json(nullptr);
  if (report.verdict == PairabilityVerdict::pairable) {
    out["faudree_consistent"] =
        faudree_consistency(lg.graph.vertex_count(), max_degree(lg.graph));
  }
  write_json(c, out, "verify-pp");
  switch (report.verdict) {
    case PairabilityVerdict::pairable: return kExitOk;
    case PairabilityVerdict::counterexample: return counterexample_exit(c);
    case PairabilityVerdict::budget_exceeded: return kExitCapExceeded;
  }
  return kExitOk;
}

struct CheckArgs {
  std::string graph;
  std::string conditions = "cut,faudree";
};

int run_check(const CheckArgs& a, const Common& c) {
  auto lg = load_graph(a.graph);
  const auto& g = lg.graph;
  json out = {{"graph", emit_graph(g, lg.roles)}};
  bool all_hold = true;
  for (const auto& cond : split_list(a.conditions)) {
    if (cond == "cut") {
      auto r = cut_condition(g);
      text_out() << "cut: " << (r.holds ? "holds" : "violated") << '\n';
      json j = {{"holds", r.holds}};
      if (!r.holds) {
        text_out() << "  violating set:";
        for (auto v : *r.violating) text_out() << ' ' << v;
        text_out() << " (cut " << r.cut << ")\n";
        j["violating"] = to_json(*r.violating);
        j["cut"] = r.cut;
      }
      out["cut"] = j;
      all_hold = all_hold && r.holds;
    } else if (cond == "faudree") {
      const auto delta = max_degree(g);
      const bool ok = faudree_consistency(g.vertex_count(), delta);
      text_out() << "faudree: " << (ok ? "holds" : "violated") << " (n=" << g.vertex_count()
                << ", max degree " << delta << ")\n";
      out["faudree"] = {{"holds", ok}, {"n", g.vertex_count()}, {"max_degree", delta}};
      all_hold = all_hold && ok;
    } else if (cond == "planar") {
      auto r = is_planar(g);
      text_out() << "planar: " << (r.planar ? "yes" : "no") << '\n';
      json j = {{"planar", r.planar}};
      if (r.planar) {
        j["embedding"] = r.embedding;
      } else {
        j["kuratowski"] = edges_json(r.kuratowski);
        j["kind"] = kuratowski_kind(g.vertex_count(), r.kuratowski) == KuratowskiKind::k5 ? "K5"
                                                                                          : "K3,3";
      }
      out["planar"] = j;
    } else if (cond == "k5-minor") {
      const bool has = has_clique_minor(g, 5);
      text_out() << "k5-minor: " << (has ? "yes" : "no") << '\n';
      out["k5_minor"] = has;
    } else {
      throw std::invalid_argument("unknown condition '" + cond + "'");
    }
  }
  write_json(c, out, "check");
  return all_hold ? kExitOk : counterexample_exit(c);
}

// ---------------------------------------------------------------------------
// lemma lab

struct LemmaArgs {
  std::string which;
  std::string graph;
  std::string k_range = "2..64";
  std::size_t k = 2;
  std::string eps1;
  std::string eps2;
  std::size_t floor = kTrichotomyFloor;
  std::string a;
  std::string u;
  std::optional<std::size_t> threshold;
  std::optional<Vertex> x;
  std::optional<std::size_t> radius;
  std::string eps;
  std::string mode = "maximum";
};

std::pair<long, long> parse_k_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long k = std::stol(text);
    return {k, k};
  }
  return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
}

json lemma5_json(const Lemma5Report& r) {
  return {{"n", r.n},
          {"a_size", r.a_size},
          {"b_size", r.b_size},
          {"cut_edges", r.cut_edges},
          {"degree_two", r.degree_two},
          {"a_prime", to_json(r.a_prime)},
          {"a_prime_cut", r.a_prime_cut},
          {"degree_two_bound", r.degree_two_bound},
          {"degree_two_holds", r.degree_two_holds},
          {"a_prime_holds", r.a_prime_holds},
          {"a_prime_cut_holds", r.a_prime_cut_holds}};
}

json bad_edges_json(const BadEdgeReport& r) {
  return {{"a_star", to_json(r.a_star)},
          {"b_star", to_json(r.b_star)},
          {"y", to_json(r.y)},
          {"type1", edges_json(r.by_type[0])},
          {"type2", edges_json(r.by_type[1])},
          {"type3", edges_json(r.by_type[2])},
          {"type4", edges_json(r.by_type[3])},
          {"good", r.good},
          {"total_bad", r.total_bad()}};
}

json weak_json(const WeakReachability& w) {
  return {{"source", w.source},
          {"radius", w.radius},
          {"ball", to_json(w.ball)},
          {"reachable", to_json(w.reachable)},
          {"intersection", to_json(w.intersection)},
          {"witness", w.witness}};
}

std::size_t resolve_radius(const LemmaArgs& a) {
  if (a.radius) return *a.radius;
  if (!a.eps.empty()) return weak_radius(parse_rational(a.eps));
  throw std::invalid_argument("give --radius or --eps");
}

int run_lemma(const LemmaArgs& a, const Common& c) {
  json out = {{"lemma", a.which}};
  bool ok = true;

  if (a.which == "fact1") {
    auto [lo, hi] = parse_k_range(a.k_range);
    json rows = json::array();
    for (long k = lo; k <= hi; ++k) {
      auto r = fact1_check(k);
      text_out() << "k=" << k << (r.holds ? " holds" : " FAILS") << (r.equality ? " (equality)" : "")
                << '\n';
      rows.push_back({{"k", k},
                      {"lhs", to_string(r.lhs)},
                      {"rhs", to_string(r.rhs)},
                      {"factored", to_string(r.factored)},
                      {"holds", r.holds},
                      {"equality", r.equality}});
      ok = ok && r.holds;
    }
    out["rows"] = rows;
    write_json(c, out, "lemma");
    return ok ? kExitOk : counterexample_exit(c);
  }

  if (a.which == "trichotomy") {
    auto mg = parse_multigraph(read_file(a.graph));
    const Rational half_share = power_of_two(-static_cast<long>(a.k) - 1);
    const Rational e1 = a.eps1.empty() ? half_share : parse_rational(a.eps1);
    const Rational e2 = a.eps2.empty() ? half_share : parse_rational(a.eps2);
    auto r = lemma3_trichotomy(mg, a.k, e1, e2, a.floor);
    text_out() << "m=" << r.m << " condition1=" << r.condition1 << " condition2=" << r.condition2
              << " condition3=" << r.condition3 << (r.advisory ? " (advisory: below floor)" : "")
              << '\n';
    out.update({{"graph", emit_multigraph(mg)},
                {"m", r.m},
                {"k", r.k},
                {"eps1", to_string(r.eps1)},
                {"eps2", to_string(r.eps2)},
                {"max_incidence", r.max_incidence},
                {"far_pairs", r.far_pairs},
                {"good_matching", r.good_matching ? json(*r.good_matching) : json(nullptr)},
                {"condition1", r.condition1},
                {"condition2", r.condition2},
                {"condition3", r.condition3},
                {"floor", r.floor},
                {"advisory", r.advisory}});
    write_json(c, out, "lemma");
    return r.any() || r.advisory ? kExitOk : counterexample_exit(c);
  }

  auto lg = load_graph(a.graph);
  const auto& g = lg.graph;
  const auto n = g.vertex_count();
  out["graph"] = emit_graph(g, lg.roles);

  if (a.which == "lemma5") {
    auto set_a = parse_vertex_list(a.a, n);
    auto r = lemma5_check(g, set_a, set_a.complement());
    text_out() << "degree-two: " << r.degree_two << " >= " << r.degree_two_bound << ' '
              << r.degree_two_holds << '\n'
              << "|A'|: " << r.a_prime.size() << " < 2|B| = " << 2 * r.b_size << ' ' << r.a_prime_holds
              << '\n'
              << "e(A',B): " << r.a_prime_cut << " < 6|B| = " << 6 * r.b_size << ' '
              << r.a_prime_cut_holds << '\n';
    out.update(lemma5_json(r));
    ok = r.all_hold();
  } else if (a.which == "partition") {
    if (!a.threshold) throw std::invalid_argument("partition needs --threshold");
    auto initial = degree_partition(g, *a.threshold);
    auto refined = refine_partition(g, initial);
    auto star_part = star_partition(g, refined);
    text_out() << "migrated:";
    for (auto v : refined.migrated) text_out() << ' ' << v;
    text_out() << "\ncut:";
    for (auto cut : refined.cut_history) text_out() << ' ' << cut;
    text_out() << "\nA*: " << star_part.a_star.size() << " B*: " << star_part.b_star.size() << '\n';
    out.update({{"threshold", refined.threshold},
                {"initial_b", to_json(initial.b)},
                {"a", to_json(refined.a)},
                {"b", to_json(refined.b)},
                {"migrated", refined.migrated},
                {"cut_history", refined.cut_history},
                {"a_star", to_json(star_part.a_star)},
                {"b_star", to_json(star_part.b_star)},
                {"heavy", to_json(star_part.heavy)}});
  } else if (a.which == "badedges" || a.which == "hub") {
    auto a_star = parse_vertex_list(a.a, n);
    auto r = classify_bad_edges(g, a_star, a_star.complement());
    text_out() << "type I: " << r.count(BadType::type1) << " type II: " << r.count(BadType::type2)
              << " type III: " << r.count(BadType::type3) << " type IV: " << r.count(BadType::type4)
              << " good: " << r.good << '\n';
    out.update(bad_edges_json(r));
    if (a.which == "hub") {
      auto hub = hub_multigraph(g, r.y, r.b_star);
      text_out() << emit_multigraph(hub.graph);
      out["hub_multigraph"] = emit_multigraph(hub.graph);
      out["hub_vertex"] = hub.hub_vertex;
      out["origin"] = hub.origin;
    }
  } else if (a.which == "weak") {
    if (!a.x) throw std::invalid_argument("weak needs --x");
    auto set_a = parse_vertex_list(a.a, n);
    auto set_u = a.u.empty() ? set_a : parse_vertex_list(a.u, n);
    auto w = weak_reachability(g, set_a, set_a.complement(), set_u, *a.x, resolve_radius(a));
    text_out() << "reachable:";
    for (auto v : w.reachable) text_out() << ' ' << v;
    text_out() << "\nball:";
    for (auto v : w.ball) text_out() << ' ' << v;
    text_out() << "\nU_x:";
    for (auto v : w.intersection) text_out() << ' ' << v;
    text_out() << '\n';
    out.update(weak_json(w));
  } else if (a.which == "aux") {
    auto set_a = parse_vertex_list(a.a, n);
    auto set_u = a.u.empty() ? set_a : parse_vertex_list(a.u, n);
    auto aux = build_auxiliary_pairing_graph(g, set_a, set_u, resolve_radius(a));
    text_out() << emit_graph(aux.graph);
    out["auxiliary"] = emit_graph(aux.graph);
    out["host"] = aux.host;
  } else if (a.which == "matching") {
    const auto mode = a.mode == "greedy" ? MatchingMode::greedy : MatchingMode::maximum;
    auto m = extract_matching(g, mode);
    for (const auto& e : m) text_out() << e.u << ' ' << e.v << '\n';
    out["mode"] = a.mode;
    out["matching"] = edges_json(m);
    out["perfect"] = 2 * m.size() == n;
  } else {
    throw std::invalid_argument("unknown lemma '" + a.which + "'");
  }
  write_json(c, out, "lemma");
  return ok ? kExitOk : counterexample_exit(c);
}

struct CensusArgs {
  std::vector<std::string> families;
  std::string checks = "route-all,verify-pp,cut,faudree";
  std::size_t samples = 1000;
  bool timings = false;
};

int run_census_cmd(const CensusArgs& a, const Common& c) {
  CensusConfig config;
  config.families = a.families;
  config.checks = split_list(a.checks);
  config.seed = c.seed;
  config.jobs = c.jobs;
  config.budget = c.budget;
  config.random_pairings = a.samples;
  config.timings = a.timings;
  auto result = run_census(config);
  for (const auto& rec : result.report["records"]) {
    text_out() << rec["family"].get<std::string>() << ' ' << rec["params"].dump() << ' '
              << rec["check"].get<std::string>() << ": " << rec["outcome"].get<std::string>()
              << '\n';
  }
  if (!c.json_path.empty()) {
    json body = result.report;
    body.erase("schema");
    write_json(c, body, "census");
  }
  if (result.exit_code == kExitCounterexample && c.allow_counterexamples) return kExitOk;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path-pairability toolkit"};
  app.require_subcommand(1);
  std::string cap_note = std::string("Size caps can be raised with ") + kCapOverrideEnv +
                         "=<n> at your own risk.";
  app.footer(cap_note);

  Common common;

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Emit a named graph family member");
  generate->add_option("family", gen.family, "star | complete | complete-bipartite | ktq | triangle-hub")
      ->required();
  generate->add_option("params", gen.params, "Family parameters");
  generate->add_flag("--dot", gen.dot, "DOT output instead of the edge list");
  add_common(generate, common);

  RouteArgs ra;
  auto* route_cmd = app.add_subcommand("route", "Route a full pairing of triangle_hub(k)");
  route_cmd->add_option("--k", ra.k, "Construction parameter")->required();
  route_cmd->add_option("--pairing", ra.pairing, "Pairing file or random:<seed>")->required();
  route_cmd->add_option("--case4", ra.case4, "Same-class hub choice")
      ->check(CLI::IsMember({"lower", "upper"}));
  add_common(route_cmd, common);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Exact edge-disjoint paths for one pairing");
  solve->add_option("--graph", sa.graph, "Edge-list file")->required();
  solve->add_option("--pairs", sa.pairs, "Pairing file")->required();
  add_common(solve, common);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-pp", "Exhaustive path-pairability check");
  verify->add_option("--graph", va.graph, "Edge-list file")->required();
  verify->add_option("--k", va.k, "Check k-path-pairability instead");
  verify->add_flag("--orbits", va.orbits, "One pairing per automorphism orbit");
  verify->add_flag("--all", va.all, "Count every failing pairing");
  add_common(verify, common);

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Necessary conditions");
  check->add_option("--graph", ca.graph, "Edge-list file")->required();
  check->add_option("--conditions", ca.conditions, "Comma list: cut, faudree, planar, k5-minor");
  add_common(check, common);

  LemmaArgs la;
  auto* lemma = app.add_subcommand("lemma", "Lemma lab");
  lemma->add_option("which", la.which)
      ->required()
      ->check(CLI::IsMember(
          {"fact1", "trichotomy", "lemma5", "partition", "badedges", "hub", "weak", "matching", "aux"}));
  lemma->add_option("--graph", la.graph, "Edge-list file (multigraph for trichotomy)");
  lemma->add_option("--k-range", la.k_range, "fact1: k or lo..hi");
  lemma->add_option("--k", la.k, "trichotomy: matching size");
  lemma->add_option("--eps1", la.eps1, "trichotomy: exact rational");
  lemma->add_option("--eps2", la.eps2, "trichotomy: exact rational");
  lemma->add_option("--floor", la.floor, "trichotomy: advisory floor on m");
  lemma->add_option("--a", la.a, "Vertex list of A (or A*)");
  lemma->add_option("--u", la.u, "Vertex list of U (defaults to A)");
  lemma->add_option("--threshold", la.threshold, "partition: degree threshold");
  lemma->add_option("--x", la.x, "weak: source vertex");
  lemma->add_option("--radius", la.radius, "weak/aux: distance bound");
  lemma->add_option("--eps", la.eps, "weak/aux: radius = ceil(4/eps)");
  lemma->add_option("--mode", la.mode, "matching mode")->check(CLI::IsMember({"maximum", "greedy"}));
  add_common(lemma, common);

  CensusArgs cen;
  auto* census = app.add_subcommand("census", "Batch checks over graph families");
  census->add_option("--family", cen.families, "e.g. triangle-hub:1..2 or complete-bipartite:2,2");
  census->add_option("--checks", cen.checks,
                     "Comma list: route-all, route-random, verify-pp, cut, faudree, planar");
  census->add_option("--samples", cen.samples, "Pairings per graph for route-random");
  census->add_flag("--timings", cen.timings, "Record per-record wall time");
  add_common(census, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (common.json_path == "-") text_stream = &std::cerr;

  try {
    if (generate->parsed()) return run_generate(gen, common);
    if (route_cmd->parsed()) return run_route(ra, common);
    if (solve->parsed()) return run_solve(sa, common);
    if (verify->parsed()) return run_verify(va, common);
    if (check->parsed()) return run_check(ca, common);
    if (lemma->parsed()) return run_lemma(la, common);
    if (census->parsed()) return run_census_cmd(cen, common);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
