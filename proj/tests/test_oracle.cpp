#include <gtest/gtest.h>

#include <random>

#include "graphcake/errors.hpp"
#include "graphcake/fixtures.hpp"
#include "graphcake/oracle.hpp"
#include "graphcake/protocols.hpp"
#include "support.hpp"

using namespace graphcake;
using namespace graphcake::testing;

namespace {

GridSearchConfig config(std::size_t grid, Objective objective = Objective::kMaxEgalitarianWelfare) {
  GridSearchConfig cfg;
  cfg.grid = grid;
  cfg.objective = objective;
  return cfg;
}

// Independent brute force: every assignment of grid cells to agents, piece counts via the
// library's component counter.
Rational brute_force_welfare(const Instance& inst, std::size_t grid) {
  const std::size_t cells = inst.graph.edge_count() * grid;
  const std::size_t n = inst.agent_count();
  std::size_t total = 1;
  for (std::size_t c = 0; c < cells; ++c) total *= n;
  Rational best = -1;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::vector<Interval>> parts(n);
    std::size_t rest = code;
    for (std::size_t c = 0; c < cells; ++c) {
      parts[rest % n].push_back({c / grid, make_rational(static_cast<long>(c % grid), static_cast<long>(grid)),
                                 make_rational(static_cast<long>(c % grid + 1), static_cast<long>(grid))});
      rest /= n;
    }
    Rational worst = 2;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      const Piece p(parts[a]);
      ok = piece_is_connected(inst.graph, p);
      worst = std::min(worst, value_of_piece(inst.agents[a], p));
    }
    if (ok) best = std::max(best, worst);
  }
  return best;
}

}  // namespace

TEST(Oracle, StarTightTwo) {
  const GridSearchResult r = grid_search_best(star_tight(2), config(6));
  EXPECT_EQ(r.optimum, q("1/3"));
  const auto report = verify_allocation(star_tight(2), r.witness);
  EXPECT_EQ(report.egalitarian, q("1/3"));
  EXPECT_TRUE(report.all_connected());
  EXPECT_TRUE(report.complete);
}

TEST(Oracle, SingleEdgeHalf) {
  const Instance inst = identical_uniform(path_graph(1), 2);
  EXPECT_EQ(grid_search_best(inst, config(2)).optimum, q("1/2"));
}

TEST(Oracle, ChoreStarTwo) {
  const GridSearchResult r = grid_search_best(chore_star(2), config(6, Objective::kMinEgalitarianCost));
  EXPECT_EQ(r.optimum, q("2/3"));
  EXPECT_EQ(verify_allocation(chore_star(2), r.witness).egalitarian, q("2/3"));
}

TEST(Oracle, MatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    const CakeGraph g = random_connected(rng, 2 + rng() % 2, rng() % 2);
    std::vector<Valuation> agents{random_valuation(rng, g.edge_count()), random_valuation(rng, g.edge_count())};
    const Instance inst{g, agents, Mode::kCake};
    const std::size_t grid = g.edge_count() <= 2 ? 4 : 3;
    EXPECT_EQ(grid_search_best(inst, config(grid)).optimum, brute_force_welfare(inst, grid)) << trial;
  }
}

TEST(Oracle, WitnessIsLexLeast) {
  // Two agents, one edge, grid 2: both halves work; agent 1 takes the first cell.
  const Instance inst = identical_uniform(path_graph(1), 2);
  const GridSearchResult r = grid_search_best(inst, config(2));
  EXPECT_EQ(r.witness.pieces[0], Piece({{0, 0, q("1/2")}}));
}

TEST(Oracle, DominatesProtocols) {
  const std::vector<Instance> fixtures{star_tight(2), four_edge_star(), equit_star3(), three_bridge("star")};
  for (const Instance& inst : fixtures) {
    const Rational protocol = verify_allocation(inst, connected_egalitarian(inst).allocation).egalitarian;
    EXPECT_GE(grid_search_best(inst, config(6)).optimum, protocol);
  }
  const Instance chores = chore_star(2);
  const Rational cost = verify_allocation(chores, chore_two(chores).allocation).egalitarian;
  EXPECT_LE(grid_search_best(chores, config(6, Objective::kMinEgalitarianCost)).optimum, cost);
}

TEST(Oracle, GridRefinementMonotone) {
  for (const Instance& inst : {star_tight(2), three_bridge("star"), frontier_edge(q("3/4"))}) {
    for (std::size_t d : {2, 3}) {
      EXPECT_LE(grid_search_best(inst, config(d)).optimum, grid_search_best(inst, config(2 * d)).optimum);
    }
  }
}

TEST(Oracle, PieceBudget) {
  // With two pieces in total each agent is connected, so the three-bridge bound stays.
  GridSearchConfig cfg = config(3);
  cfg.piece_budget = 2;
  EXPECT_EQ(grid_search_best(ternary_tree(1), cfg).optimum, q("1/3"));
  // A third piece lets one agent hold two leaves.
  cfg.piece_budget = 3;
  EXPECT_GT(grid_search_best(ternary_tree(1), cfg).optimum, q("1/3"));
}

TEST(Oracle, InequityAndFrontier) {
  GridSearchConfig cfg = config(6, Objective::kMinInequity);
  cfg.require_complete = true;
  EXPECT_EQ(grid_search_best(equit_star3(), cfg).optimum, q("1/3"));
  cfg.require_complete = false;
  EXPECT_EQ(grid_search_best(equit_star3(), cfg).optimum, 0);

  GridSearchConfig frontier = config(8, Objective::kMaxFrontierPartner);
  frontier.frontier_threshold = q("1/4");
  frontier.frontier_strict = true;
  EXPECT_EQ(grid_search_best(four_edge_star(), frontier).optimum, q("1/2"));
  frontier.frontier_threshold = 1;
  EXPECT_FALSE(grid_search_best(four_edge_star(), frontier).feasible);
}

TEST(Oracle, Budget) {
  GridSearchConfig cfg = config(6);
  cfg.max_states = 10;
  try {
    grid_search_best(star_tight(2), cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
  }
}

TEST(PowersOfThree, BaseCase) {
  const PowersOfThreeCheck r = check_powers_of_three(1, -3, 1);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.min_gap, q("1/6"));
  ASSERT_EQ(r.minimizer.size(), 1u);
  const auto [c, a] = r.minimizer[0];
  EXPECT_EQ(a, -1);
  EXPECT_TRUE(c == 1 || c == 2);
}

TEST(PowersOfThree, SmallWindows) {
  const PowersOfThreeCheck two = check_powers_of_three(2, -3, 1);
  EXPECT_TRUE(two.holds);
  EXPECT_EQ(two.min_gap, q("1/18"));
  Rational sum = 0;
  for (auto [c, a] : two.minimizer) {
    Rational term = c;
    for (int i = 0; i < (a < 0 ? -a : a); ++i) term = a < 0 ? Rational(term / 3) : Rational(term * 3);
    sum += term;
  }
  EXPECT_EQ(abs(sum - q("1/2")), q("1/18"));
  const PowersOfThreeCheck three = check_powers_of_three(3, -4, 1);
  EXPECT_TRUE(three.holds);
  EXPECT_GE(three.min_gap, q("1/54"));
}

TEST(PowersOfThree, Limits) {
  EXPECT_THROW(check_powers_of_three(0, 0, 1), Error);
  EXPECT_THROW(check_powers_of_three(7, 0, 1), Error);
  EXPECT_THROW(check_powers_of_three(2, -10, 5), Error);
}
