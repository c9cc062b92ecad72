#include "pathpair/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <thread>

#include "pathpair/caps.hpp"
#include "pathpair/conditions.hpp"
#include "pathpair/constructions.hpp"
#include "pathpair/hub_router.hpp"
#include "pathpair/planarity.hpp"
#include "pathpair/random_planar.hpp"

namespace pathpair {

using nlohmann::json;

json to_json(const Pairing& p) {
  json out = json::array();
  for (const auto& pr : p) out.push_back({pr.first, pr.second});
  return out;
}

json to_json(const PathSystem& paths) {
  json out = json::array();
  for (const auto& path : paths.paths) out.push_back(path);
  return out;
}

json to_json(const VertexSet& s) { return s.members(); }

json to_json(const VerifyReport& r) {
  json out = {
      {"verdict", verdict_name(r.verdict)},
      {"pairings_total", r.pairings_total},
      {"pairings_checked", r.pairings_checked},
  };
  if (r.orbits) out["orbits"] = r.orbits;
  if (r.failing) out["failing"] = r.failing;
  if (r.undecided) out["undecided"] = r.undecided;
  out["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return out;
}

namespace {

std::string normalize(std::string name) {
  std::replace(name.begin(), name.end(), '_', '-');
  return name;
}

void expect_arity(const std::string& family, const std::vector<std::size_t>& params,
                  std::size_t arity) {
  if (params.size() != arity) {
    throw std::invalid_argument(family + " takes " + std::to_string(arity) + " parameter(s), got " +
                                std::to_string(params.size()));
  }
}

std::size_t parse_size(std::string_view tok, const std::string& spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("bad parameter '" + std::string(tok) + "' in " + spec);
  }
  return value;
}

}  // namespace

FamilyGraph generate_family(const std::string& family, const std::vector<std::size_t>& params) {
  const auto name = normalize(family);
  FamilyGraph out{name, params, {}, {}};
  if (name == "star") {
    expect_arity(name, params, 1);
    out.graph = star(params[0]);
  } else if (name == "complete") {
    expect_arity(name, params, 1);
    out.graph = complete(params[0]);
  } else if (name == "complete-bipartite") {
    expect_arity(name, params, 2);
    out.graph = complete_bipartite(params[0], params[1]);
  } else if (name == "ktq") {
    expect_arity(name, params, 2);
    out.graph = k_t_q(params[0], params[1]);
  } else if (name == "triangle-hub") {
    expect_arity(name, params, 1);
    TriangleHubGraph th(params[0]);
    out.graph = th.graph();
    out.roles = th.role_table();
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  return out;
}

std::vector<FamilyGraph> expand_family_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  if (colon != std::string::npos) {
    std::string_view rest(spec);
    rest.remove_prefix(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      auto part = rest.substr(0, comma);
      const auto dots = part.find("..");
      if (dots == std::string_view::npos) {
        const auto v = parse_size(part, spec);
        ranges.emplace_back(v, v);
      } else {
        const auto lo = parse_size(part.substr(0, dots), spec);
        const auto hi = parse_size(part.substr(dots + 2), spec);
        if (lo > hi) throw std::invalid_argument("empty range in " + spec);
        ranges.emplace_back(lo, hi);
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  std::vector<FamilyGraph> out;
  std::vector<std::size_t> params;
  for (const auto& r : ranges) params.push_back(r.first);
  // Odometer over the parameter ranges, last parameter fastest.
  while (true) {
    out.push_back(generate_family(family, params));
    std::size_t i = params.size();
    while (i > 0 && params[i - 1] == ranges[i - 1].second) {
      params[i - 1] = ranges[i - 1].first;
      --i;
    }
    if (i == 0) break;
    ++params[i - 1];
  }
  return out;
}

namespace {

const std::vector<std::string> kChecks = {"route-all", "route-random", "verify-pp",
                                          "cut",       "faudree",      "planar"};

inline constexpr std::size_t kRouteAllVertexCap = 12;

enum class Outcome { pass, fail, not_applicable, cap_exceeded, budget_exceeded };

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::not_applicable: return "not-applicable";
    case Outcome::cap_exceeded: return "cap-exceeded";
    case Outcome::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

struct Task {
  std::size_t graph;
  std::string check;
};

struct Record {
  Outcome outcome = Outcome::pass;
  json detail = json::object();
  double millis = 0;
};

bool is_triangle_hub(const FamilyGraph& fg) { return fg.family == "triangle-hub"; }

Record route_all(const FamilyGraph& fg) {
  Record rec;
  if (!is_triangle_hub(fg)) {
    rec.outcome = Outcome::not_applicable;
    return rec;
  }
  TriangleHubGraph th(fg.params[0]);
  enforce_cap("route-all", th.graph().vertex_count(), kRouteAllVertexCap);
  std::size_t routed = 0;
  for (const auto& p : full_pairings(th.graph().vertex_count())) {
    for (auto choice : {SameClassHub::lower, SameClassHub::upper}) {
      auto paths = route(th, p, choice);
      if (auto why = path_system_violation(th.graph(), p, paths)) {
        rec.outcome = Outcome::fail;
        rec.detail["witness"] = to_json(p);
        rec.detail["violation"] = *why;
        return rec;
      }
    }
    ++routed;
  }
  rec.detail["pairings"] = routed;
  return rec;
}

Record route_random(const FamilyGraph& fg, std::size_t samples, std::uint64_t seed) {
  Record rec;
  if (!is_triangle_hub(fg)) {
    rec.outcome = Outcome::not_applicable;
    return rec;
  }
  TriangleHubGraph th(fg.params[0]);
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    auto p = random_full_pairing(th.graph().vertex_count(), rng);
    auto paths = route(th, p);
    if (auto why = path_system_violation(th.graph(), p, paths)) {
      rec.outcome = Outcome::fail;
      rec.detail["witness"] = to_json(p);
      rec.detail["violation"] = *why;
      return rec;
    }
    if (i == 0) {
      rec.detail["sample_pairing"] = to_json(p);
      rec.detail["sample_paths"] = to_json(paths);
    }
  }
  rec.detail["pairings"] = samples;
  rec.detail["seed"] = seed;
  return rec;
}

Record verify_pp(const FamilyGraph& fg, std::uint64_t budget) {
  Record rec;
  if (fg.graph.vertex_count() % 2 != 0) {
    rec.outcome = Outcome::not_applicable;
    rec.detail["reason"] = "odd vertex count";
    return rec;
  }
  VerifyOptions opts;
  opts.budget = budget;
  opts.use_orbits = true;
  auto report = is_path_pairable(fg.graph, opts);
  rec.detail = to_json(report);
  switch (report.verdict) {
    case PairabilityVerdict::pairable: rec.outcome = Outcome::pass; break;
    case PairabilityVerdict::counterexample: rec.outcome = Outcome::fail; break;
    case PairabilityVerdict::budget_exceeded: rec.outcome = Outcome::budget_exceeded; break;
  }
  if (report.verdict == PairabilityVerdict::pairable) {
    const auto n = fg.graph.vertex_count();
    rec.detail["faudree_consistent"] = faudree_consistency(n, max_degree(fg.graph));
  }
  return rec;
}

Record cut(const FamilyGraph& fg) {
  Record rec;
  auto result = cut_condition(fg.graph);
  rec.detail["holds"] = result.holds;
  if (!result.holds) {
    rec.outcome = Outcome::fail;
    rec.detail["violating"] = to_json(*result.violating);
    rec.detail["cut"] = result.cut;
  }
  return rec;
}

Record faudree(const FamilyGraph& fg) {
  Record rec;
  const auto n = fg.graph.vertex_count();
  const auto delta = max_degree(fg.graph);
  const bool ok = faudree_consistency(n, delta);
  rec.detail = {{"n", n}, {"max_degree", delta}, {"holds", ok}};
  if (!ok) rec.outcome = Outcome::fail;
  return rec;
}

Record planar(const FamilyGraph& fg) {
  Record rec;
  auto result = is_planar(fg.graph);
  rec.detail["planar"] = result.planar;
  if (result.planar) {
    rec.detail["embedding"] = result.embedding;
  } else {
    json edges = json::array();
    for (const auto& e : result.kuratowski) edges.push_back({e.u, e.v});
    rec.detail["kuratowski"] = edges;
  }
  return rec;
}

Record run_task(const FamilyGraph& fg, const std::string& check, const CensusConfig& config,
                std::size_t index) {
  try {
    if (check == "route-all") return route_all(fg);
    if (check == "route-random") {
      return route_random(fg, config.random_pairings, config.seed + index);
    }
    if (check == "verify-pp") return verify_pp(fg, config.budget);
    if (check == "cut") return cut(fg);
    if (check == "faudree") return faudree(fg);
    return planar(fg);
  } catch (const CapExceeded& e) {
    Record rec;
    rec.outcome = Outcome::cap_exceeded;
    rec.detail["error"] = e.what();
    return rec;
  }
}

}  // namespace

CensusResult run_census(const CensusConfig& config) {
  for (const auto& c : config.checks) {
    if (std::find(kChecks.begin(), kChecks.end(), c) == kChecks.end()) {
      throw std::invalid_argument("unknown check '" + c + "'");
    }
  }
  std::vector<FamilyGraph> graphs;
  for (const auto& spec : config.families) {
    for (auto& fg : expand_family_spec(spec)) graphs.push_back(std::move(fg));
  }
  std::vector<Task> tasks;
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    for (const auto& c : config.checks) tasks.push_back({g, c});
  }

  std::vector<Record> records(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const auto start = std::chrono::steady_clock::now();
      records[i] = run_task(graphs[tasks[i].graph], tasks[i].check, config, i);
      records[i].millis =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
    }
  };
  const unsigned jobs = std::max(1U, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CensusResult result;
  json out = json::array();
  bool failed = false;
  bool capped = false;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& fg = graphs[tasks[i].graph];
    const auto& rec = records[i];
    json entry = {
        {"family", fg.family},
        {"params", fg.params},
        {"graph", emit_graph(fg.graph, fg.roles)},
        {"check", tasks[i].check},
        {"outcome", outcome_name(rec.outcome)},
        {"detail", rec.detail},
    };
    if (config.timings) entry["millis"] = rec.millis;
    out.push_back(std::move(entry));
    failed = failed || rec.outcome == Outcome::fail;
    capped = capped || rec.outcome == Outcome::cap_exceeded ||
             rec.outcome == Outcome::budget_exceeded;
  }
  result.report = {{"schema", kReportSchema}, {"seed", config.seed}, {"records", out}};
  result.exit_code = failed ? kExitCounterexample : capped ? kExitCapExceeded : kExitOk;
  return result;
}

}  // namespace pathpair
