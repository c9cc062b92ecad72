#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pathpair/graph.hpp"
#include "pathpair/rational.hpp"

namespace pathpair {

struct Fact1Result {
  long k = 0;
  /// 2^{-k} (1 + 2^{-k-1}) / (1 - 2^{-k})^2
  Rational lhs;
  /// 2^{-k+1}
  Rational rhs;
  /// (2^{-k+2} - 1)(2^{-k-1} - 1), nonnegative exactly when lhs <= rhs.
  Rational factored;
  bool holds = false;
  bool equality = false;
  bool factored_nonnegative = false;
};

/// Exact evaluation of the averaging inequality used to step the trichotomy induction.
/// Throws std::invalid_argument for k < 2.
Fact1Result fact1_check(long k);

/// Other multiedges sharing an endpoint with e.
std::size_t incidence_count(const Multigraph& mg, MultiedgeId e);
/// Unordered pairs of multiedges at distance > 1, unreachable pairs included.
std::size_t far_pair_count(const Multigraph& mg);

inline constexpr std::size_t kGoodMatchingEdgeCap = 40;

/// k multiedges pairwise at distance exactly 1 (which makes them a matching), smallest
/// ids first; nullopt when the exhaustive search finds none. Throws CapExceeded when
/// the multigraph has more than kGoodMatchingEdgeCap multiedges.
std::optional<std::vector<MultiedgeId>> find_good_matching(const Multigraph& mg, std::size_t k);

/// True when `ids` are k distinct multiedges pairwise at distance exactly 1.
bool is_good_matching(const Multigraph& mg, const std::vector<MultiedgeId>& ids);

inline constexpr std::size_t kTrichotomyFloor = 20;

struct TrichotomyReport {
  std::size_t m = 0;
  Rational eps1;
  Rational eps2;
  std::size_t k = 0;
  std::size_t max_incidence = 0;
  std::size_t far_pairs = 0;
  std::optional<std::vector<MultiedgeId>> good_matching;
  /// Some multiedge is incident with at least eps1 * m others.
  bool condition1 = false;
  /// At least eps2 * C(m, 2) pairs are at distance > 1.
  bool condition2 = false;
  /// A good k-matching exists.
  bool condition3 = false;
  std::size_t floor = kTrichotomyFloor;
  /// m is below the floor, so the trichotomy is not guaranteed.
  bool advisory = false;

  bool any() const { return condition1 || condition2 || condition3; }
};

/// Evaluates the three trichotomy conditions. Requires eps1, eps2 >= 0 and
/// eps1 + eps2 <= 2^{-k} (exact); throws std::invalid_argument otherwise.
TrichotomyReport lemma3_trichotomy(const Multigraph& mg, std::size_t k, const Rational& eps1,
                                   const Rational& eps2, std::size_t floor = kTrichotomyFloor);

/// Recomputes every flag from the report's own fields and the multigraph.
bool verify_trichotomy(const Multigraph& mg, const TrichotomyReport& report);

}  // namespace pathpair
