#include <gtest/gtest.h>

#include "graphcake/errors.hpp"
#include "graphcake/surgery.hpp"
#include "graphcake/valuation.hpp"
#include "support.hpp"

using namespace graphcake;
using namespace graphcake::testing;

namespace {

// Density 2 on [0,1/4], 0 on [1/4,3/4], 2 on [3/4,1]: one unit of value.
EdgeDensity split_density() { return EdgeDensity({{0, 2}, {q("1/4"), 0}, {q("3/4"), 2}}); }

KnifeTrajectory along(EdgeIndex e) { return KnifeTrajectory{{{e, 0, 1}}}; }

}  // namespace

TEST(EdgeDensity, Validation) {
  EXPECT_THROW(EdgeDensity({{q("1/2"), 1}}), Error);
  EXPECT_THROW(EdgeDensity({{0, 1}, {0, 2}}), Error);
  EXPECT_THROW(EdgeDensity({{0, -1}}), Error);
  EXPECT_THROW(EdgeDensity({{0, 1}, {1, 2}}), Error);
  EXPECT_EQ(EdgeDensity({{0, 1}, {q("1/2"), 1}}), EdgeDensity::uniform(1));
}

TEST(ValueOfPiece, Examples) {
  Valuation edge = Valuation::per_edge_uniform({1});
  EXPECT_EQ(value_of_piece(edge, Piece({{0, 0, q("1/2")}})), q("1/2"));

  Valuation star = uniform_valuation(star_graph(3));
  EXPECT_EQ(value_of_piece(star, Piece({{0, 0, 1}, {1, 0, q("1/2")}})), q("1/2"));

  Valuation split(std::vector<EdgeDensity>{split_density()});
  EXPECT_EQ(value_of_piece(split, Piece({{0, 0, q("1/2")}})), q("1/2"));
  EXPECT_EQ(value_of_piece(split, Piece()), 0);
  EXPECT_THROW(value_of_piece(split, Piece::full_edge(1)), Error);
}

TEST(CutQuery, Examples) {
  EXPECT_EQ(cut_query(Valuation::per_edge_uniform({1}), along(0), q("1/3")).position, q("1/3"));

  Valuation late(std::vector<EdgeDensity>{EdgeDensity({{0, 0}, {q("1/2"), 2}})});
  EXPECT_EQ(cut_query(late, along(0), q("1/2")).position, q("3/4"));

  Valuation split(std::vector<EdgeDensity>{split_density()});
  EXPECT_EQ(cut_query(split, along(0), q("1/2")).position, q("1/4"));

  try {
    cut_query(split, along(0), q("3/2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInsufficientValue);
  }
}

TEST(CutQuery, BackwardLegsAndPlateauAcrossLegs) {
  Valuation v(std::vector<EdgeDensity>{split_density(), EdgeDensity::uniform(0)});
  KnifeTrajectory back{{{0, 1, 0}}};
  KnifeStop s = cut_query(v, back, q("1/4"));
  EXPECT_EQ(s.position, q("7/8"));
  EXPECT_EQ(prefix_piece(back, s), Piece({{0, q("7/8"), 1}}));
  EXPECT_EQ(suffix_piece(back, s), Piece({{0, 0, q("7/8")}}));

  KnifeTrajectory two{{{0, 0, 1}, {1, 0, 1}}};
  KnifeStop end = cut_query(v, two, 1);
  EXPECT_EQ(end.leg, 0u);
  EXPECT_EQ(end.position, 1);
  EXPECT_TRUE(stops_before(two, end, KnifeStop{1, 0}) == false);
  EXPECT_EQ(leg_progress(two, KnifeStop{1, q("1/2")}), q("3/2"));
}

TEST(CutQuery, RoundTripAndMonotone) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 100; ++round) {
    const std::size_t m = 1 + rng() % 4;
    Valuation v = random_valuation(rng, m);
    KnifeTrajectory t;
    for (EdgeIndex e = 0; e < m; ++e) {
      if (rng() % 2) t.legs.push_back({e, 0, 1});
      else t.legs.push_back({e, 1, 0});
    }
    Rational lambda(static_cast<long>(rng() % 101), 100);
    lambda.canonicalize();
    KnifeStop s = cut_query(v, t, lambda);
    EXPECT_EQ(value_of_piece(v, prefix_piece(t, s)), lambda);
    EXPECT_EQ(value_of_piece(v, suffix_piece(t, s)), 1 - lambda);

    Rational prev = -1;
    for (std::size_t leg = 0; leg < m; ++leg) {
      for (int step = 0; step <= 4; ++step) {
        Rational frac = make_rational(step, 4);
        const KnifeLeg& l = t.legs[leg];
        KnifeStop at{leg, l.from + frac * (l.to - l.from)};
        Rational value = value_of_piece(v, prefix_piece(t, at));
        EXPECT_GE(value, prev);
        prev = value;
      }
    }
  }
}

TEST(Renormalize, Examples) {
  CakeGraph g = path_graph(1);
  Valuation uni = Valuation::per_edge_uniform({1});
  InducedCake whole = induced_cake(g, Piece::whole(g));
  EXPECT_EQ(restrict_and_renormalize(uni, Piece::whole(g), whole.map), uni);

  Piece half({{0, 0, q("1/2")}});
  InducedCake ic = induced_cake(g, half);
  EXPECT_EQ(restrict_and_renormalize(uni, half, ic.map), uni);

  Piece nothing({{0, 0, q("1/2")}});
  Valuation late(std::vector<EdgeDensity>{EdgeDensity({{0, 0}, {q("1/2"), 2}})});
  try {
    restrict_and_renormalize(late, nothing, ic.map);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kZeroValuePiece);
  }
}

TEST(Renormalize, StarPieceTriples) {
  CakeGraph g = star_graph(3);
  Valuation v = uniform_valuation(g);
  Piece third({{0, 0, 1}});
  InducedCake ic = induced_cake(g, third);
  Valuation r = restrict_and_renormalize(v, third, ic.map);
  EXPECT_EQ(r.total(), 1);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 5; ++i) {
    Rational a(static_cast<long>(rng() % 50), 100), b(static_cast<long>(50 + rng() % 50), 100);
    a.canonicalize();
    b.canonicalize();
    Piece sub({{0, a, b}});
    EXPECT_EQ(value_of_piece(r, sub), 3 * value_of_piece(v, ic.map.to_parent(sub)));
  }
}

TEST(Renormalize, PreservesRatiosOnRandomPieces) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 50; ++round) {
    CakeGraph g = random_connected(rng, 2 + rng() % 4, rng() % 3);
    Valuation v = random_valuation(rng, g.edge_count());
    Piece p = Piece::whole(g).minus(Piece({{rng() % g.edge_count(), q("1/2"), 1}}));
    if (!piece_is_connected(g, p)) continue;
    InducedCake ic = induced_cake(g, p);
    Valuation r = restrict_and_renormalize(v, p, ic.map);
    EXPECT_EQ(r.total(), 1);
    Piece q1({{0, 0, q("1/2")}});
    Piece q2 = Piece::whole(ic.graph).minus(q1);
    EXPECT_EQ(value_of_piece(r, q1) * value_of_piece(v, ic.map.to_parent(q2)),
              value_of_piece(r, q2) * value_of_piece(v, ic.map.to_parent(q1)));
  }
}

TEST(PulledBack, ReversedOrientation) {
  EdgeDensity d({{0, 1}, {q("1/2"), 3}});
  EdgeDensity back = d.pulled_back(1, q("1/4"));
  // [1/4, 1] read from 1 down to 1/4: first 2/3 of the way density 3, then density 1.
  EXPECT_EQ(back, EdgeDensity({{0, q("9/4")}, {q("2/3"), q("3/4")}}));
  EXPECT_EQ(back.total(), d.integral(q("1/4"), 1));
}

TEST(Instance, Validation) {
  CakeGraph g = path_graph(2);
  Instance ok{g, {uniform_valuation(g)}, Mode::kCake};
  EXPECT_NO_THROW(validate_instance(ok));
  Instance unnormalized{g, {Valuation::per_edge_uniform({1, 1})}, Mode::kCake};
  EXPECT_THROW(validate_instance(unnormalized), Error);
  Instance short_agent{g, {Valuation::per_edge_uniform({1})}, Mode::kCake};
  EXPECT_THROW(validate_instance(short_agent), Error);
  Instance nobody{g, {}, Mode::kCake};
  EXPECT_THROW(validate_instance(nobody), Error);
}

TEST(QueryLog, CountsQueries) {
  QueryLog log;
  Valuation v = Valuation::per_edge_uniform({1});
  evaluate(v, Piece::full_edge(0), log);
  cut(v, along(0), q("1/2"), log);
  cut(v, along(0), q("1/3"), log);
  EXPECT_EQ(log.evaluations, 1u);
  EXPECT_EQ(log.cuts, 2u);
}
