#include <array>

#include "graphcake/errors.hpp"
#include "graphcake/protocols.hpp"
#include "protocols/common.hpp"

namespace graphcake {

namespace {

constexpr std::array<std::size_t, 2> kBoth{0, 1};

/// Both agents run a knife along `t` to value 1/2; the earlier one takes the swept part.
ProtocolResult half_sweep(const Instance& inst, const KnifeTrajectory& t) {
  ProtocolResult r;
  std::vector<detail::KnifeRunner> runners{{0, Rational(1, 2)}, {1, Rational(1, 2)}};
  detail::KnifeOutcome win = detail::knife_race(inst.agents, runners, t, r.queries);
  const std::size_t first = runners[win.winner].measure;
  r.allocation.pieces.resize(2);
  r.allocation.pieces[first] = prefix_piece(t, win.stop);
  r.allocation.pieces[1 - first] = Piece::whole(inst.graph).minus(r.allocation.pieces[first]);
  return r;
}

}  // namespace

ProtocolResult proportional_two_connected(const Instance& inst, const OrientedLabeling& labeling) {
  detail::require_agents(inst, 2, Mode::kCake, "prop2");
  if (!is_contiguous(inst.graph, labeling)) {
    throw Error(ErrorKind::kLabelingNotContiguous, "labeling fails the contiguity conditions");
  }
  KnifeTrajectory t;
  for (EdgeIndex e : labeling.order) t.legs.push_back(detail::leg_from(inst.graph, e, labeling.tail[e]));
  return half_sweep(inst, t);
}

ProtocolResult two_agent_best(const Instance& inst) {
  detail::require_agents(inst, 2, Mode::kCake, "best2");
  if (is_almost_bridgeless(classify_almost_bridgeless(inst.graph))) {
    return proportional_two_connected(inst, compute_contiguous_labeling(inst.graph));
  }
  return two_agent_fixed(inst);
}

ProtocolResult two_agent_fixed(const Instance& inst) {
  detail::require_agents(inst, 2, Mode::kCake, "fixed2");
  ProtocolResult r;
  const std::vector<Valuation> second_twice{inst.agents[1], inst.agents[1]};
  Extraction ex =
      extract_piece(inst.graph, second_twice, Piece::whole(inst.graph), Rational(1, 3), kBoth, r.queries);
  const bool first_takes_piece =
      evaluate(inst.agents[0], ex.piece, r.queries) >= evaluate(inst.agents[0], ex.remainder, r.queries);
  r.allocation.pieces = first_takes_piece ? std::vector<Piece>{ex.piece, ex.remainder}
                                          : std::vector<Piece>{ex.remainder, ex.piece};
  return r;
}

EntitlementResult two_agent_flexible(const Instance& inst, const Rational& alpha) {
  detail::require_agents(inst, 2, Mode::kCake, "flex2");
  if (alpha <= 0 || alpha > Rational(1, 4)) {
    throw Error(ErrorKind::kAlphaOutOfRange, "alpha must lie in (0, 1/4], got " + format_rational(alpha));
  }
  EntitlementResult out;
  Extraction ex = extract_piece(inst, Piece::whole(inst.graph), alpha, kBoth, out.result.queries);
  out.alpha_agent = ex.winner;
  out.complement_agent = 1 - ex.winner;
  out.result.allocation.pieces.resize(2);
  out.result.allocation.pieces[ex.winner] = ex.piece;
  out.result.allocation.pieces[1 - ex.winner] = ex.remainder;
  return out;
}

ProtocolResult equitable_two(const Instance& inst) {
  detail::require_agents(inst, 2, Mode::kCake, "equit2");
  ProtocolResult r;
  const std::vector<Valuation> combined{inst.agents[0].plus(inst.agents[1])};
  const std::array<std::size_t, 1> only{0};
  Extraction ex = extract_piece(inst.graph, combined, Piece::whole(inst.graph), Rational(2, 3), only, r.queries);
  r.allocation.pieces = {ex.piece, ex.remainder};
  return r;
}

KnifeTrajectory height_two_sweep(const CakeGraph& g, VertexIndex root) {
  if (root >= g.vertex_count()) throw Error(ErrorKind::kNotHeightTwoTree, "root is not a vertex of the graph");
  if (g.vertex_count() != g.edge_count() + 1) throw Error(ErrorKind::kNotHeightTwoTree, "graph is not a tree");
  const detail::RootedTree t = detail::root_tree(g, root);
  KnifeTrajectory sweep;
  for (const Incidence& child : t.children[root]) {
    for (const Incidence& grandchild : t.children[child.other]) {
      if (!t.children[grandchild.other].empty()) {
        throw Error(ErrorKind::kNotHeightTwoTree, "tree is deeper than two levels below the root");
      }
      sweep.legs.push_back(detail::leg_from(g, grandchild.edge, child.other));
    }
    sweep.legs.push_back(detail::leg_from(g, child.edge, child.other));
  }
  return sweep;
}

ProtocolResult height2_two_piece_proportional(const Instance& inst, VertexIndex root) {
  detail::require_agents(inst, 2, Mode::kCake, "height2");
  return half_sweep(inst, height_two_sweep(inst.graph, root));
}

}  // namespace graphcake
