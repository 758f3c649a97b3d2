#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "graphcake/errors.hpp"
#include "graphcake/topology.hpp"
#include "support.hpp"

using namespace graphcake;
using namespace graphcake::testing;

namespace {

CakeGraph with_extra_edge(const CakeGraph& g, VertexIndex x, VertexIndex y) {
  std::vector<Edge> edges = g.edges();
  edges.push_back({"extra", x, y});
  return CakeGraph(g.vertex_ids(), edges);
}

bool connected_without(const CakeGraph& g, EdgeIndex skip) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexIndex> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    VertexIndex v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(v)) {
      if (inc.edge == skip || seen[inc.other]) continue;
      seen[inc.other] = true;
      stack.push_back(inc.other);
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Calls `visit` with the edge set of every vertex-simple path with at least one edge.
void for_each_simple_path(const CakeGraph& g, const std::function<void(const std::vector<EdgeIndex>&)>& visit) {
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<EdgeIndex> edges;
  std::function<void(VertexIndex)> grow = [&](VertexIndex v) {
    for (const Incidence& inc : g.incident(v)) {
      if (on_path[inc.other]) continue;
      on_path[inc.other] = true;
      edges.push_back(inc.edge);
      visit(edges);
      grow(inc.other);
      edges.pop_back();
      on_path[inc.other] = false;
    }
  };
  for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
    on_path[s] = true;
    grow(s);
    on_path[s] = false;
  }
}

}  // namespace

TEST(Bridges, Examples) {
  EXPECT_TRUE(find_bridges(cycle_graph(3)).empty());
  EXPECT_EQ(find_bridges(star_graph(3)), (std::vector<EdgeIndex>{0, 1, 2}));
  EXPECT_TRUE(find_bridges(flower_left()).empty());
  EXPECT_TRUE(find_bridges(flower_right()).empty());
  EXPECT_TRUE(find_bridges(make_graph(2, {{0, 1}, {1, 0}})).empty());
}

TEST(Bridges, AgreeWithDeletion) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    CakeGraph g = random_connected(rng, 2 + rng() % 8, rng() % 5);
    if (g.edge_count() > 12) continue;
    auto bridges = find_bridges(g);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      bool listed = std::find(bridges.begin(), bridges.end(), e) != bridges.end();
      EXPECT_EQ(listed, !connected_without(g, e));
    }
  }
}

TEST(Classify, Examples) {
  auto path = classify_almost_bridgeless(path_graph(3));
  ASSERT_TRUE(is_almost_bridgeless(path));
  auto ends = std::get<AlmostBridgeless>(path);
  EXPECT_EQ(std::minmax(ends.x, ends.y), std::minmax<VertexIndex>(0, 3));

  auto star = classify_almost_bridgeless(star_graph(3));
  ASSERT_FALSE(is_almost_bridgeless(star));
  EXPECT_EQ(std::get<BridgeTriple>(star).bridges, (std::array<EdgeIndex, 3>{0, 1, 2}));

  auto tri = classify_almost_bridgeless(cycle_graph(3));
  ASSERT_TRUE(is_almost_bridgeless(tri));
  auto xy = std::get<AlmostBridgeless>(tri);
  EXPECT_TRUE(cycle_graph(3).touches(0, xy.x) && cycle_graph(3).touches(0, xy.y));
}

TEST(Classify, WitnessesHold) {
  std::mt19937_64 rng(5);
  int yes = 0, no = 0;
  for (int round = 0; round < 300; ++round) {
    CakeGraph g = random_connected(rng, 2 + rng() % 7, rng() % 3);
    auto w = classify_almost_bridgeless(g);
    if (is_almost_bridgeless(w)) {
      ++yes;
      auto [x, y] = std::get<AlmostBridgeless>(w);
      EXPECT_TRUE(find_bridges(with_extra_edge(g, x, y)).empty());
    } else {
      ++no;
      auto triple = std::get<BridgeTriple>(w).bridges;
      auto bridges = find_bridges(g);
      for (EdgeIndex b : triple) EXPECT_NE(std::find(bridges.begin(), bridges.end(), b), bridges.end());
      for_each_simple_path(g, [&](const std::vector<EdgeIndex>& path) {
        int hits = 0;
        for (EdgeIndex b : triple) hits += std::find(path.begin(), path.end(), b) != path.end();
        EXPECT_LT(hits, 3);
      });
    }
  }
  EXPECT_GT(yes, 20);
  EXPECT_GT(no, 20);
}

TEST(Contiguity, Predicate) {
  CakeGraph edge = path_graph(1);
  EXPECT_TRUE(is_contiguous(edge, OrientedLabeling{{0}, {0}}));

  CakeGraph tri = cycle_graph(3);  // e0: v0-v1, e1: v1-v2, e2: v2-v0
  OrientedLabeling around{{0, 1, 2}, {0, 1, 2}};
  EXPECT_TRUE(is_contiguous(tri, around));
  OrientedLabeling flipped{{0, 1, 2}, {0, 2, 2}};
  EXPECT_FALSE(is_contiguous(tri, flipped));
  EXPECT_FALSE(is_contiguous(tri, OrientedLabeling{{0, 0, 2}, {0, 1, 2}}));
}

TEST(Contiguity, LabelingExamples) {
  OrientedLabeling single = compute_contiguous_labeling(path_graph(1));
  EXPECT_EQ(single.order, (std::vector<EdgeIndex>{0}));
  EXPECT_EQ(single.tail[0], 0u);

  CakeGraph tri = cycle_graph(3);
  OrientedLabeling lab = compute_contiguous_labeling(tri);
  EXPECT_TRUE(is_contiguous(tri, lab));
  EXPECT_EQ(lab.order.size(), 3u);

  CakeGraph left = flower_left();
  OrientedLabeling flower = compute_contiguous_labeling(left);
  EXPECT_EQ(flower.order.size(), 9u);
  EXPECT_TRUE(is_contiguous(left, flower));
  EXPECT_TRUE(is_contiguous(flower_right(), compute_contiguous_labeling(flower_right())));

  try {
    compute_contiguous_labeling(star_graph(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAlmostBridgeless);
  }
}

TEST(Contiguity, LabelingEndsAtWitness) {
  CakeGraph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 4}});
  auto w = std::get<AlmostBridgeless>(classify_almost_bridgeless(g));
  OrientedLabeling lab = compute_contiguous_labeling(g);
  EXPECT_TRUE(is_contiguous(g, lab));
  EXPECT_TRUE(g.touches(lab.order.front(), w.x));
  EXPECT_TRUE(g.touches(lab.order.back(), w.y));
}

TEST(Contiguity, RandomEarGraphs) {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 500; ++round) {
    CakeGraph g = random_ear_graph(rng, 1 + rng() % 4, rng() % 5);
    ASSERT_TRUE(is_almost_bridgeless(classify_almost_bridgeless(g)));
    OrientedLabeling lab = compute_contiguous_labeling(g);
    ASSERT_TRUE(is_contiguous(g, lab)) << to_dot(g);
  }
}

TEST(Bipolar, Examples) {
  BipolarSearch edge = find_bipolar_numbering(path_graph(1));
  ASSERT_TRUE(edge.numbering);
  EXPECT_EQ(*edge.numbering, (std::vector<std::size_t>{1, 2}));

  BipolarSearch tri = find_bipolar_numbering(cycle_graph(3));
  ASSERT_TRUE(tri.numbering);
  EXPECT_TRUE(is_bipolar_numbering(cycle_graph(3), *tri.numbering));

  for (const CakeGraph& g : {flower_left(), flower_right()}) {
    BipolarSearch none = find_bipolar_numbering(g);
    EXPECT_FALSE(none.numbering);
    EXPECT_TRUE(none.complete);
    EXPECT_TRUE(is_almost_bridgeless(classify_almost_bridgeless(g)));
  }
  EXPECT_THROW(find_bipolar_numbering(path_graph(11)), Error);
}

TEST(Bipolar, AgreesWithBruteForce) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 150; ++round) {
    CakeGraph g = random_connected(rng, 2 + rng() % 5, rng() % 3);
    std::vector<std::size_t> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), std::size_t{1});
    bool exists = false;
    do {
      exists = exists || is_bipolar_numbering(g, perm);
    } while (!exists && std::next_permutation(perm.begin(), perm.end()));
    BipolarSearch s = find_bipolar_numbering(g);
    EXPECT_TRUE(s.complete);
    EXPECT_EQ(s.numbering.has_value(), exists);
    if (s.numbering) {
      EXPECT_TRUE(is_bipolar_numbering(g, *s.numbering));
      EXPECT_TRUE(is_almost_bridgeless(classify_almost_bridgeless(g)));
    }
  }
}

TEST(Dot, MarksBridges) {
  std::string dot = to_dot(make_graph(3, {{0, 1}, {1, 2}, {2, 1}}));
  EXPECT_NE(dot.find("[label=\"e0\", style=dashed]"), std::string::npos);
  EXPECT_NE(dot.find("[label=\"e1\"]"), std::string::npos);
}
