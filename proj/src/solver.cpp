#include "pathpair/solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <unordered_set>

namespace pathpair {

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::feasible: return "feasible";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

// Residual adjacency view: neighbours of v joined by an unused edge.
template <typename Visit>
void for_residual_neighbors(const SimpleGraph& g, const EdgeMask& used, Vertex v, Visit&& visit) {
  for (Vertex w : g.neighbors(v)) {
    auto idx = *g.edge_index(v, w);
    if (!used.test(idx)) visit(w, idx);
  }
}

std::vector<int> residual_distances(const SimpleGraph& g, const EdgeMask& used, Vertex from) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for_residual_neighbors(g, used, v, [&](Vertex w, std::size_t) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

// Number of shortest s-t paths in the residual graph, saturating; 0 if disconnected.
std::uint64_t shortest_path_count(const SimpleGraph& g, const EdgeMask& used, Vertex s, Vertex t) {
  constexpr std::uint64_t kSaturate = std::uint64_t{1} << 40;
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<std::uint64_t> count(g.vertex_count(), 0);
  std::deque<Vertex> queue{s};
  dist[s] = 0;
  count[s] = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (v == t) break;
    for_residual_neighbors(g, used, v, [&](Vertex w, std::size_t) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
      if (dist[w] == dist[v] + 1) count[w] = std::min(kSaturate, count[w] + count[v]);
    });
  }
  return count[t];
}

class Search {
 public:
  Search(const SimpleGraph& g, const Pairing& pairing, std::uint64_t budget)
      : g_(g), pairing_(pairing), budget_(budget), used_(g.edge_count()),
        routed_(pairing.size(), false), paths_(pairing.size()) {}

  SolveStatus run() { return dfs(pairing_.size()); }
  std::uint64_t expansions() const { return expansions_; }
  PathSystem take_paths() { return PathSystem{std::move(paths_)}; }

 private:
  SolveStatus dfs(std::size_t remaining_count) {
    if (remaining_count == 0) return SolveStatus::feasible;

    std::vector<TerminalPair> remaining;
    for (std::size_t i = 0; i < pairing_.size(); ++i) {
      if (!routed_[i]) remaining.push_back(pairing_[i]);
    }
    if (!residual_prune(g_, used_, remaining)) return SolveStatus::infeasible;

    auto key = state_key();
    if (failed_.count(key)) return SolveStatus::infeasible;

    // Fail-first: the pair with the fewest shortest residual paths.
    std::size_t pick = pairing_.size();
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 0; i < pairing_.size(); ++i) {
      if (routed_[i]) continue;
      auto c = shortest_path_count(g_, used_, pairing_[i].first, pairing_[i].second);
      if (c < best) {
        best = c;
        pick = i;
      }
    }

    const auto [s, t] = pairing_[pick];
    auto to_target = residual_distances(g_, used_, t);
    routed_[pick] = true;
    on_path_.assign(g_.vertex_count(), false);
    Path path{s};
    on_path_[s] = true;
    const int max_len = static_cast<int>(g_.vertex_count()) - 1;
    for (int len = to_target[s]; len <= max_len; ++len) {
      auto status = extend(pick, t, len, to_target, path, remaining_count);
      if (status != SolveStatus::infeasible) {
        routed_[pick] = status == SolveStatus::feasible;
        return status;
      }
    }
    routed_[pick] = false;
    failed_.insert(std::move(key));
    return SolveStatus::infeasible;
  }

  // Enumerates simple s-t paths of exactly `len` edges in the residual graph, recursing
  // into dfs for each complete path.
  SolveStatus extend(std::size_t pick, Vertex target, int len, const std::vector<int>& to_target,
                     Path& path, std::size_t remaining_count) {
    const Vertex v = path.back();
    const int depth = static_cast<int>(path.size()) - 1;
    if (v == target) {
      if (depth != len) return SolveStatus::infeasible;
      if (++expansions_ > budget_) return SolveStatus::budget_exceeded;
      paths_[pick] = path;
      auto saved_on_path = on_path_;
      auto status = dfs(remaining_count - 1);
      on_path_ = std::move(saved_on_path);
      return status;
    }
    for (Vertex w : g_.neighbors(v)) {
      auto idx = *g_.edge_index(v, w);
      if (used_.test(idx) || on_path_[w]) continue;
      if (to_target[w] < 0 || depth + 1 + to_target[w] > len) continue;
      used_.set(idx);
      on_path_[w] = true;
      path.push_back(w);
      auto status = extend(pick, target, len, to_target, path, remaining_count);
      if (status != SolveStatus::infeasible) return status;
      path.pop_back();
      on_path_[w] = false;
      used_.reset(idx);
    }
    return SolveStatus::infeasible;
  }

  std::string state_key() const {
    std::string key;
    for (auto w : used_.words()) key.append(reinterpret_cast<const char*>(&w), sizeof w);
    for (bool r : routed_) key.push_back(r ? '1' : '0');
    return key;
  }

  const SimpleGraph& g_;
  const Pairing& pairing_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  EdgeMask used_;
  std::vector<bool> routed_;
  std::vector<char> on_path_;
  std::vector<Path> paths_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

bool residual_prune(const SimpleGraph& g, const EdgeMask& used,
                    std::span<const TerminalPair> remaining) {
  if (remaining.empty()) return true;
  const std::size_t n = g.vertex_count();

  std::vector<int> component(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    component[s] = next;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for_residual_neighbors(g, used, v, [&](Vertex w, std::size_t) {
        if (component[w] < 0) {
          component[w] = next;
          stack.push_back(w);
        }
      });
    }
    ++next;
  }
  for (const auto& p : remaining) {
    if (component[p.first] != component[p.second]) return false;
  }

  // Demand-aware cut test on sampled sets: every adjacent pair {u, w} and every
  // closed residual neighbourhood N[v].
  std::vector<char> in_set(n, 0);
  auto cut_ok = [&](const std::vector<Vertex>& members) {
    for (Vertex v : members) in_set[v] = 1;
    std::size_t capacity = 0;
    for (Vertex v : members) {
      for_residual_neighbors(g, used, v, [&](Vertex w, std::size_t) {
        if (!in_set[w]) ++capacity;
      });
    }
    std::size_t demand = 0;
    for (const auto& p : remaining) demand += in_set[p.first] != in_set[p.second];
    for (Vertex v : members) in_set[v] = 0;
    return demand <= capacity;
  };
  for (const auto& e : g.edges()) {
    if (!cut_ok({e.u, e.v})) return false;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Vertex> closed{static_cast<Vertex>(v)};
    for_residual_neighbors(g, used, static_cast<Vertex>(v),
                           [&](Vertex w, std::size_t) { closed.push_back(w); });
    if (closed.size() > 2 && !cut_ok(closed)) return false;
  }
  return true;
}

SolveResult find_disjoint_paths(const SimpleGraph& g, const Pairing& pairing,
                                std::uint64_t budget) {
  pairing.check_within(g.vertex_count());
  Search search(g, pairing, budget);
  SolveResult result;
  result.status = search.run();
  result.expansions = search.expansions();
  if (result.status == SolveStatus::feasible) {
    result.paths = search.take_paths();
    if (auto bad = path_system_violation(g, pairing, result.paths)) {
      throw std::logic_error("solver produced an invalid path system: " + *bad);
    }
  }
  return result;
}

}  // namespace pathpair
