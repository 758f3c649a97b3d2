#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graphcake/valuation.hpp"

namespace graphcake {

/// Named worst-case construction plus its parameters ("n", "k", "alpha", "eps", "side", ...).
/// Integer parameters are given as rationals with denominator 1; `side` and `shape` are
/// strings.
struct FixtureSpec {
  std::string name;
  std::map<std::string, std::string> parameters;
};

struct FixtureInfo {
  std::string name;
  std::string parameters;
  std::string summary;
};

const std::vector<FixtureInfo>& fixture_catalog();

/// Throws Error(UnknownFixture) or Error(BadParameters).
Instance build_fixture(const FixtureSpec& spec);

// Typed builders behind the catalog.
Instance star_tight(int n);
Instance star_fnk_tight(int n, int k);
Instance three_bridge(const std::string& shape = "star");
Instance frontier_edge(const Rational& alpha);
Instance four_edge_star();
Instance fig2(const Rational& alpha = Rational(1, 4), const Rational& eps = Rational(1, 100));
Instance fig1_flowers(const std::string& side);
Instance ternary_tree(int k);
Instance equit_star3();
Instance chore_star(int n);

enum class GraphFamily { kTree, kStar, kCycleAugmented, kArbitrary, kHeightTwo };

struct GeneratorParams {
  int agents = 2;
  int edges = 5;
  int max_segments = 3;
  GraphFamily family = GraphFamily::kArbitrary;
  Mode mode = Mode::kCake;
};

GraphFamily parse_family(const std::string& name);
std::string family_name(GraphFamily family);

/// Deterministic in (seed, params). Throws Error(BadParameters) outside n in 1..8,
/// edges in 1..12, segments in 1..4 (stars need at least 3 edges).
Instance random_instance(std::uint64_t seed, const GeneratorParams& params);

}  // namespace graphcake
