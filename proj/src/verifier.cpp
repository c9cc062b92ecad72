#include "pathpair/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "pathpair/automorphism.hpp"
#include "pathpair/caps.hpp"

namespace pathpair {

std::string_view verdict_name(PairabilityVerdict v) {
  switch (v) {
    case PairabilityVerdict::pairable: return "pairable";
    case PairabilityVerdict::counterexample: return "counterexample";
    case PairabilityVerdict::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

// Perfect matchings of `free` (sorted), first free vertex paired with each later one.
void matchings(std::vector<Vertex>& free, std::vector<TerminalPair>& acc,
               std::vector<Pairing>& out) {
  if (free.empty()) {
    out.emplace_back(acc);
    return;
  }
  const Vertex head = free.front();
  for (std::size_t i = 1; i < free.size(); ++i) {
    const Vertex mate = free[i];
    std::vector<Vertex> rest;
    rest.reserve(free.size() - 2);
    for (std::size_t j = 1; j < free.size(); ++j) {
      if (j != i) rest.push_back(free[j]);
    }
    acc.push_back({head, mate});
    matchings(rest, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::size_t pairing_count(std::size_t n, std::size_t k) {
  if (2 * k > n) return 0;
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  auto mul = [](std::size_t a, std::size_t b) { return b != 0 && a > kMax / b ? kMax : a * b; };
  // C(n, 2k) * (2k-1)!!
  std::size_t count = 1;
  for (std::size_t i = 0; i < 2 * k; ++i) {
    if (count == kMax) return kMax;
    // C(n, i) * (n - i) is divisible by i + 1
    const std::size_t scaled = mul(count, n - i);
    if (scaled == kMax) return kMax;
    count = scaled / (i + 1);
  }
  for (std::size_t odd = 1; odd < 2 * k; odd += 2) count = mul(count, odd);
  return count;
}

std::vector<Pairing> full_pairings(std::size_t n) {
  if (n % 2 != 0) throw GraphError("full pairings need an even vertex count");
  enforce_cap("pairing enumeration", pairing_count(n, n / 2), kPairingEnumerationCap);
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  std::vector<TerminalPair> acc;
  std::vector<Pairing> out;
  matchings(all, acc, out);
  return out;
}

std::vector<Pairing> k_pairings(std::size_t n, std::size_t k) {
  if (2 * k > n) throw GraphError("need n >= 2k");
  enforce_cap("pairing enumeration", pairing_count(n, k), kPairingEnumerationCap);
  std::vector<Pairing> out;
  // Walk every 2k-subset via a selection mask, then every perfect matching on it.
  std::vector<char> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(2 * k), 1);
  do {
    std::vector<Vertex> chosen;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) chosen.push_back(static_cast<Vertex>(i));
    }
    std::vector<TerminalPair> acc;
    matchings(chosen, acc, out);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end(),
            [](const Pairing& a, const Pairing& b) { return a.pairs() < b.pairs(); });
  return out;
}

VerifyReport verify_pairings(const SimpleGraph& g, std::vector<Pairing> pairings,
                             const VerifyOptions& opts) {
  VerifyReport report;
  report.pairings_total = pairings.size();

  PairingOrbits orbits;
  std::vector<std::size_t> candidates;
  if (opts.use_orbits) {
    orbits = orbits_of(g, std::move(pairings));
    candidates = orbits.representatives;
    report.orbits = candidates.size();
  } else {
    orbits.pairings = std::move(pairings);
    candidates.resize(orbits.pairings.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
  }
  const auto& all = orbits.pairings;

  std::vector<SolveStatus> status(candidates.size(), SolveStatus::feasible);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{candidates.size()};

  auto worker = [&] {
    for (;;) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= candidates.size()) return;
      if (!opts.full_enumeration && slot > first_failure.load()) continue;
      status[slot] = find_disjoint_paths(g, all[candidates[slot]], opts.budget).status;
      if (status[slot] == SolveStatus::infeasible) {
        std::size_t seen = first_failure.load();
        while (slot < seen && !first_failure.compare_exchange_weak(seen, slot)) {
        }
      }
    }
  };
  const unsigned jobs = std::max(1U, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Every slot below first_failure was evaluated, so the merge is schedule-independent.
  const std::size_t fail = first_failure.load();
  const std::size_t horizon = opts.full_enumeration ? candidates.size()
                                                     : std::min(fail + 1, candidates.size());
  std::optional<std::size_t> first_undecided;
  for (std::size_t slot = 0; slot < horizon; ++slot) {
    if (status[slot] == SolveStatus::budget_exceeded) {
      ++report.undecided;
      if (!first_undecided) first_undecided = slot;
    }
  }
  if (opts.full_enumeration) {
    for (std::size_t slot = 0; slot < candidates.size(); ++slot) {
      if (status[slot] != SolveStatus::infeasible) continue;
      if (opts.use_orbits) {
        report.failing += static_cast<std::size_t>(
            std::count(orbits.orbit.begin(), orbits.orbit.end(), slot));
      } else {
        ++report.failing;
      }
    }
  }

  if (fail < candidates.size()) {
    report.verdict = PairabilityVerdict::counterexample;
    report.witness = all[candidates[fail]];
    report.pairings_checked = opts.full_enumeration ? candidates.size() : fail + 1;
  } else if (first_undecided) {
    report.verdict = PairabilityVerdict::budget_exceeded;
    report.witness = all[candidates[*first_undecided]];
    report.pairings_checked = candidates.size();
  } else {
    report.verdict = PairabilityVerdict::pairable;
    report.pairings_checked = candidates.size();
  }
  return report;
}

VerifyReport is_path_pairable(const SimpleGraph& g, const VerifyOptions& opts) {
  if (g.vertex_count() % 2 != 0) {
    throw GraphError("path-pairability is defined for an even number of vertices, got " +
                     std::to_string(g.vertex_count()));
  }
  return verify_pairings(g, full_pairings(g.vertex_count()), opts);
}

VerifyReport is_k_path_pairable(const SimpleGraph& g, std::size_t k, const VerifyOptions& opts) {
  if (2 * k > g.vertex_count()) {
    throw GraphError("k-path-pairability needs n >= 2k (n=" + std::to_string(g.vertex_count()) +
                     ", k=" + std::to_string(k) + ")");
  }
  return verify_pairings(g, k_pairings(g.vertex_count(), k), opts);
}

}  // namespace pathpair
