#include "pathpair/multiedge_lemmas.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pathpair/caps.hpp"

namespace pathpair {

Fact1Result fact1_check(long k) {
  if (k < 2) throw std::invalid_argument("fact1_check needs k >= 2");
  Fact1Result r;
  r.k = k;
  const Rational one(1);
  const Rational denom = (one - power_of_two(-k)) * (one - power_of_two(-k));
  r.lhs = power_of_two(-k) * (one + power_of_two(-k - 1)) / denom;
  r.rhs = power_of_two(-k + 1);
  r.factored = (power_of_two(-k + 2) - one) * (power_of_two(-k - 1) - one);
  r.holds = r.lhs <= r.rhs;
  r.equality = r.lhs == r.rhs;
  r.factored_nonnegative = r.factored >= 0;
  return r;
}

std::size_t incidence_count(const Multigraph& mg, MultiedgeId e) {
  const auto& edge = mg.edge(e);
  std::size_t count = 0;
  for (const auto& f : mg.edges()) {
    if (f.id != e && (f.touches(edge.u) || f.touches(edge.v))) ++count;
  }
  return count;
}

std::size_t far_pair_count(const Multigraph& mg) {
  MultiedgeDistances dist(mg);
  const auto& edges = mg.edges();
  std::size_t far = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto d = dist.between(edges[i].id, edges[j].id);
      if (!d || *d > 1) ++far;
    }
  }
  return far;
}

bool is_good_matching(const Multigraph& mg, const std::vector<MultiedgeId>& ids) {
  auto sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (mg.edge(ids[i]).is_loop()) return false;
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      auto d = multiedge_distance(mg, ids[i], ids[j]);
      if (!d || *d != 1) return false;
    }
  }
  return true;
}

std::optional<std::vector<MultiedgeId>> find_good_matching(const Multigraph& mg, std::size_t k) {
  enforce_cap("find_good_matching", mg.edge_count(), kGoodMatchingEdgeCap);
  if (k == 0) return std::vector<MultiedgeId>{};

  // Parallel copies are interchangeable; keep the smallest id per vertex pair.
  std::map<std::pair<Vertex, Vertex>, MultiedgeId> first_copy;
  for (const auto& e : mg.edges()) {
    if (!e.is_loop()) first_copy.try_emplace({e.u, e.v}, e.id);
  }
  std::vector<MultiedgeId> cand;
  for (const auto& [pair, id] : first_copy) cand.push_back(id);
  std::sort(cand.begin(), cand.end());
  if (cand.size() < k) return std::nullopt;

  MultiedgeDistances dist(mg);
  const std::size_t c = cand.size();
  std::vector<std::vector<char>> ok(c, std::vector<char>(c, 0));
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      auto d = dist.between(cand[i], cand[j]);
      ok[i][j] = ok[j][i] = d && *d == 1;
    }
  }

  std::vector<std::size_t> chosen;
  auto extend = [&](auto&& self, const std::vector<std::size_t>& pool) -> bool {
    if (chosen.size() == k) return true;
    if (chosen.size() + pool.size() < k) return false;
    for (std::size_t p = 0; p < pool.size(); ++p) {
      const std::size_t i = pool[p];
      std::vector<std::size_t> next;
      for (std::size_t q = p + 1; q < pool.size(); ++q) {
        if (ok[i][pool[q]]) next.push_back(pool[q]);
      }
      chosen.push_back(i);
      if (self(self, next)) return true;
      chosen.pop_back();
      if (chosen.size() + (pool.size() - p - 1) < k) break;
    }
    return false;
  };
  std::vector<std::size_t> all(c);
  for (std::size_t i = 0; i < c; ++i) all[i] = i;
  if (!extend(extend, all)) return std::nullopt;

  std::vector<MultiedgeId> out;
  for (auto i : chosen) out.push_back(cand[i]);
  return out;
}

namespace {

void check_trichotomy_inputs(std::size_t k, const Rational& eps1, const Rational& eps2) {
  if (k == 0) throw std::invalid_argument("trichotomy needs k >= 1");
  if (eps1 < 0 || eps2 < 0) throw std::invalid_argument("eps1 and eps2 must be nonnegative");
  if (eps1 + eps2 > power_of_two(-static_cast<long>(k))) {
    throw std::invalid_argument("eps1 + eps2 = " + to_string(eps1 + eps2) + " exceeds 2^-" +
                                std::to_string(k));
  }
}

bool meets_incidence(std::size_t max_incidence, std::size_t m, const Rational& eps1) {
  return m > 0 && Rational(max_incidence) >= eps1 * m;
}

bool meets_far(std::size_t far, std::size_t m, const Rational& eps2) {
  const Rational pairs(m * (m > 0 ? m - 1 : 0) / 2);
  return m >= 2 && Rational(far) >= eps2 * pairs;
}

}  // namespace

TrichotomyReport lemma3_trichotomy(const Multigraph& mg, std::size_t k, const Rational& eps1,
                                   const Rational& eps2, std::size_t floor) {
  check_trichotomy_inputs(k, eps1, eps2);
  TrichotomyReport r;
  r.m = mg.edge_count();
  r.eps1 = eps1;
  r.eps2 = eps2;
  r.k = k;
  r.floor = floor;
  r.advisory = r.m < floor;
  for (const auto& e : mg.edges()) r.max_incidence = std::max(r.max_incidence, incidence_count(mg, e.id));
  r.far_pairs = far_pair_count(mg);
  r.good_matching = find_good_matching(mg, k);
  r.condition1 = meets_incidence(r.max_incidence, r.m, eps1);
  r.condition2 = meets_far(r.far_pairs, r.m, eps2);
  r.condition3 = r.good_matching.has_value();
  return r;
}

bool verify_trichotomy(const Multigraph& mg, const TrichotomyReport& r) {
  if (r.m != mg.edge_count()) return false;
  if (r.eps1 + r.eps2 > power_of_two(-static_cast<long>(r.k))) return false;
  std::size_t max_inc = 0;
  for (const auto& e : mg.edges()) max_inc = std::max(max_inc, incidence_count(mg, e.id));
  if (max_inc != r.max_incidence) return false;
  if (far_pair_count(mg) != r.far_pairs) return false;
  if (r.condition1 != meets_incidence(r.max_incidence, r.m, r.eps1)) return false;
  if (r.condition2 != meets_far(r.far_pairs, r.m, r.eps2)) return false;
  if (r.condition3 != r.good_matching.has_value()) return false;
  if (r.good_matching &&
      (r.good_matching->size() != r.k || !is_good_matching(mg, *r.good_matching))) {
    return false;
  }
  return r.advisory == (r.m < r.floor);
}

}  // namespace pathpair
