#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "graphcake/protocols.hpp"
#include "graphcake/surgery.hpp"

namespace graphcake::detail {

/// A derived cake still to be divided among some of the original agents, each valuation
/// renormalized to total 1 on it.
struct Stage {
  CakeGraph graph;
  CoordinateMap to_root;
  std::vector<std::size_t> agents;
  std::vector<Valuation> valuations;
};

Stage root_stage(const Instance& inst);

/// Sub-stage on `piece` (in stage coordinates) for the stage agents at `positions`.
/// Throws Error(ZeroValuePiece) if one of them values `piece` at 0.
Stage sub_stage(const Stage& stage, const Piece& piece, const std::vector<std::size_t>& positions);

Instance stage_instance(const Stage& stage, Mode mode);

/// Writes `piece` (stage coordinates) as agent `agent`'s share in root coordinates.
void assign(Allocation& out, const Stage& stage, std::size_t agent, const Piece& piece);

void require_agents(const Instance& inst, std::size_t n, Mode mode, std::string_view protocol);
void require_mode(const Instance& inst, Mode mode, std::string_view protocol);

struct RootedTree {
  VertexIndex root = 0;
  std::vector<VertexIndex> parent;
  std::vector<std::optional<EdgeIndex>> parent_edge;
  /// Children in increasing edge index order.
  std::vector<std::vector<Incidence>> children;
  /// Preorder.
  std::vector<VertexIndex> order;
};

RootedTree root_tree(const CakeGraph& tree, VertexIndex root);

/// Every edge below `x`.
Piece subtree_piece(const RootedTree& t, VertexIndex x);
/// The edge to `child` plus everything below it.
Piece branch_piece(const RootedTree& t, const Incidence& child);

/// Subtree sums from per-edge values.
std::vector<Rational> subtree_sums(const RootedTree& t, const std::vector<Rational>& edge_values);

/// Knife leg along `edge` from `from` to the other endpoint.
KnifeLeg leg_from(const CakeGraph& g, EdgeIndex edge, VertexIndex from);

struct KnifeRunner {
  std::size_t measure = 0;
  Rational target;
};

struct KnifeOutcome {
  std::size_t winner = 0;  // index into the runner list
  KnifeStop stop;
};

/// Earliest point along `t` where some runner's swept value reaches its target; ties go to the
/// earlier runner. Every runner must be able to reach its target on `t`. After the first cut,
/// a runner is only asked to cut when an evaluation shows it would stop no later.
KnifeOutcome knife_race(const std::vector<Valuation>& measures, const std::vector<KnifeRunner>& runners,
                        const KnifeTrajectory& t, QueryLog& log);

}  // namespace graphcake::detail
