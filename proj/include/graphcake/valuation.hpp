#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "graphcake/graph.hpp"
#include "graphcake/surgery.hpp"

namespace graphcake {

/// Constant density on [start, next start) of an edge.
struct DensitySegment {
  Rational start;
  Rational density;
};

/// Piecewise-constant density on one edge. The first segment starts at 0; starts are
/// strictly increasing and below 1; densities are nonnegative.
class EdgeDensity {
 public:
  /// Zero density.
  EdgeDensity();
  /// Throws Error(InvalidInstance) on a malformed segment list.
  explicit EdgeDensity(std::vector<DensitySegment> segments);

  static EdgeDensity uniform(const Rational& total);

  const std::vector<DensitySegment>& segments() const { return segments_; }
  Rational segment_end(std::size_t i) const;

  /// Integral of the density over [lo, hi].
  Rational integral(const Rational& lo, const Rational& hi) const;
  Rational total() const { return integral(0, 1); }

  EdgeDensity scaled(const Rational& factor) const;
  EdgeDensity plus(const EdgeDensity& other) const;

  /// Density of the sub-interval from `from` to `to` (either order) re-parametrised to [0,1].
  EdgeDensity pulled_back(const Rational& from, const Rational& to) const;

  friend bool operator==(const EdgeDensity&, const EdgeDensity&);

 private:
  void simplify();

  std::vector<DensitySegment> segments_;
};

/// Additive valuation (or cost function): one density per edge of a cake graph.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::vector<EdgeDensity> per_edge) : per_edge_(std::move(per_edge)) {}

  /// Each edge uniform with the given total values.
  static Valuation per_edge_uniform(const std::vector<Rational>& edge_values);

  std::size_t edge_count() const { return per_edge_.size(); }
  const EdgeDensity& edge(EdgeIndex e) const { return per_edge_.at(e); }
  const std::vector<EdgeDensity>& edges() const { return per_edge_; }

  Rational total() const;
  Valuation scaled(const Rational& factor) const;
  Valuation plus(const Valuation& other) const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<EdgeDensity> per_edge_;
};

enum class Mode { kCake, kChore };

/// Graph plus one normalized valuation per agent.
struct Instance {
  CakeGraph graph;
  std::vector<Valuation> agents;
  Mode mode = Mode::kCake;

  std::size_t agent_count() const { return agents.size(); }
};

/// Throws Error(InvalidInstance) unless every valuation covers exactly the graph's edges and
/// totals exactly 1, and there is at least one agent.
void validate_instance(const Instance& inst);

/// Exact integral of `v` over `p`. Throws Error(UnknownEdge).
Rational value_of_piece(const Valuation& v, const Piece& p);

/// One leg of a knife sweep, travelling along `edge` from position `from` to `to`.
struct KnifeLeg {
  EdgeIndex edge = 0;
  Rational from;
  Rational to;
};

/// Ordered knife sweep. Legs are independent; prefixes need not be connected.
struct KnifeTrajectory {
  std::vector<KnifeLeg> legs;

  Piece covered() const;
};

/// Where a knife stopped: `leg` index and the edge coordinate reached on that leg.
struct KnifeStop {
  std::size_t leg = 0;
  Rational position;
};

/// Distance travelled along the leg, used to order stops on the same trajectory.
Rational leg_progress(const KnifeTrajectory& t, const KnifeStop& stop);
bool stops_before(const KnifeTrajectory& t, const KnifeStop& a, const KnifeStop& b);

/// Everything the knife swept over before stopping, and the rest of the trajectory.
Piece prefix_piece(const KnifeTrajectory& t, const KnifeStop& stop);
Piece suffix_piece(const KnifeTrajectory& t, const KnifeStop& stop);

/// Robertson-Webb cut query: the earliest point along `t` at which the swept value reaches
/// `target`. Throws Error(InsufficientValue) when `target` exceeds the trajectory's value.
KnifeStop cut_query(const Valuation& v, const KnifeTrajectory& t, const Rational& target);

/// Pulls `v` back along `map` without rescaling.
Valuation restrict_valuation(const Valuation& v, const CoordinateMap& map);

/// Valuation on the cake induced by `p` (through `map`), divided by the value of `p`.
/// Throws Error(ZeroValuePiece) when `p` is worth nothing.
Valuation restrict_and_renormalize(const Valuation& v, const Piece& p, const CoordinateMap& map);

/// Query accounting for one protocol run.
struct QueryLog {
  std::uint64_t evaluations = 0;
  std::uint64_t cuts = 0;

  QueryLog& operator+=(const QueryLog& other) {
    evaluations += other.evaluations;
    cuts += other.cuts;
    return *this;
  }
  friend bool operator==(const QueryLog&, const QueryLog&) = default;
};

/// Counted evaluation query.
Rational evaluate(const Valuation& v, const Piece& p, QueryLog& log);

/// Counted cut query.
KnifeStop cut(const Valuation& v, const KnifeTrajectory& t, const Rational& target, QueryLog& log);

}  // namespace graphcake
