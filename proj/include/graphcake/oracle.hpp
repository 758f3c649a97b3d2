#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "graphcake/allocation.hpp"

namespace graphcake {

enum class Objective {
  kMaxEgalitarianWelfare,
  kMinEgalitarianCost,
  kMinInequity,
  /// Two agents: the largest value one agent can get while the other gets at least
  /// (or, when strict, more than) `frontier_threshold`. Both role assignments are searched.
  kMaxFrontierPartner,
};

struct GridSearchConfig {
  /// Cuts allowed at multiples of 1/grid on every edge.
  std::size_t grid = 2;
  Objective objective = Objective::kMaxEgalitarianWelfare;
  /// Maximum total number of connected pieces over all agents. When set, agents may hold
  /// several pieces; otherwise every agent's piece must be connected.
  std::optional<std::size_t> piece_budget;
  bool require_complete = false;
  Rational frontier_threshold;
  bool frontier_strict = false;
  /// Search nodes before Error(BudgetExceeded).
  std::uint64_t max_states = 10'000'000;
};

struct GridSearchResult {
  /// False when no grid allocation meets the frontier threshold; the optimum is then 0.
  bool feasible = true;
  Rational optimum;
  /// Lexicographically least optimal assignment of grid cells (edge order, then position,
  /// lower agent index first).
  Allocation witness;
  std::uint64_t states = 0;
};

/// Exact optimum over grid-aligned allocations. Only complete allocations are enumerated:
/// for the welfare and frontier objectives an unallocated region can always be merged into a
/// neighbouring piece without breaking connectivity or adding pieces, and chores must be
/// complete anyway. Min-inequity without `require_complete` is 0 (the empty allocation).
GridSearchResult grid_search_best(const Instance& inst, const GridSearchConfig& cfg);

struct PowersOfThreeCheck {
  bool holds = false;
  Rational min_gap;
  /// Minimising terms as (coefficient, exponent) pairs.
  std::vector<std::pair<int, int>> minimizer;
  std::uint64_t combinations = 0;
};

/// Enumerates every multiset of `t` terms c * 3^a with c in {-2,-1,1,2} and a in
/// [a_lo, a_hi], and reports whether |sum - 1/2| >= 1/(2 * 3^t) always holds.
/// Throws Error(BudgetExceeded) for t outside 1..6, a window wider than 10 or exponents
/// beyond +-30.
PowersOfThreeCheck check_powers_of_three(int t, int a_lo, int a_hi);

}  // namespace graphcake
