#include <algorithm>

#include "graphcake/errors.hpp"
#include "graphcake/protocols.hpp"
#include "graphcake/surgery.hpp"
#include "protocols/common.hpp"

namespace graphcake {

Extraction extract_piece(const CakeGraph& g, std::span<const Valuation> measures, const Piece& sub,
                         const Rational& alpha, std::span<const std::size_t> eligible, QueryLog& log) {
  if (eligible.empty()) throw Error(ErrorKind::kPreconditionFailed, "extraction needs an eligible measure");
  if (alpha < 0) throw Error(ErrorKind::kPreconditionFailed, "negative extraction threshold");
  std::vector<std::size_t> who(eligible.begin(), eligible.end());
  std::sort(who.begin(), who.end());
  if (alpha == 0) return Extraction{Piece(), who.front(), sub};
  if (sub.empty()) throw Error(ErrorKind::kInsufficientValue, "nothing to extract from an empty piece");

  InducedCake ic = induced_cake(g, sub);
  TreeSplit split = split_cycles_to_tree(ic.graph);
  const CakeGraph& tree = split.tree;
  const detail::RootedTree rt = detail::root_tree(tree, 0);

  std::vector<Valuation> local;
  for (const Valuation& m : measures) local.push_back(restrict_valuation(m, ic.map));

  // subtree[k][x]: measure who[k] of everything below x.
  std::vector<std::vector<Rational>> edge_value(who.size()), subtree(who.size());
  for (std::size_t k = 0; k < who.size(); ++k) {
    for (EdgeIndex e = 0; e < tree.edge_count(); ++e) {
      edge_value[k].push_back(evaluate(local[who[k]], Piece::full_edge(e), log));
    }
    subtree[k] = detail::subtree_sums(rt, edge_value[k]);
    if (subtree[k][rt.root] < alpha) {
      throw Error(ErrorKind::kInsufficientValue, "measure " + std::to_string(who[k]) + " values the piece at " +
                                                     format_rational(subtree[k][rt.root]) + " < " +
                                                     format_rational(alpha));
    }
  }
  auto someone_reaches = [&](auto&& value_of) {
    for (std::size_t k = 0; k < who.size(); ++k) {
      if (value_of(k) >= alpha) return true;
    }
    return false;
  };

  VertexIndex v = rt.root;
  for (bool descended = true; descended;) {
    descended = false;
    for (const Incidence& c : rt.children[v]) {
      if (someone_reaches([&](std::size_t k) { return subtree[k][c.other]; })) {
        v = c.other;
        descended = true;
        break;
      }
    }
  }

  auto finish = [&](const Piece& tree_piece, std::size_t winner) {
    Piece piece = ic.map.to_parent(tree_piece);
    return Extraction{piece, winner, sub.minus(piece)};
  };

  for (const Incidence& c : rt.children[v]) {
    auto branch = [&](std::size_t k) { return subtree[k][c.other] + edge_value[k][c.edge]; };
    if (!someone_reaches(branch)) continue;
    // Case 1: knife from the child towards v.
    KnifeTrajectory t{{detail::leg_from(tree, c.edge, c.other)}};
    std::vector<detail::KnifeRunner> runners;
    for (std::size_t k = 0; k < who.size(); ++k) {
      if (branch(k) >= alpha) runners.push_back({who[k], alpha - subtree[k][c.other]});
    }
    detail::KnifeOutcome out = detail::knife_race(local, runners, t, log);
    Piece piece = detail::subtree_piece(rt, c.other).united(prefix_piece(t, out.stop));
    return finish(piece, runners[out.winner].measure);
  }

  // Case 2: whole branches in edge order until some measure reaches alpha.
  Piece acc;
  std::vector<Rational> acc_value(who.size(), Rational(0));
  for (const Incidence& c : rt.children[v]) {
    acc = acc.united(detail::branch_piece(rt, c));
    for (std::size_t k = 0; k < who.size(); ++k) acc_value[k] += subtree[k][c.other] + edge_value[k][c.edge];
    for (std::size_t k = 0; k < who.size(); ++k) {
      if (acc_value[k] >= alpha) return finish(acc, who[k]);
    }
  }
  throw std::logic_error("extract_piece: no branch set reached the threshold");
}

Extraction extract_piece(const Instance& inst, const Piece& sub, const Rational& alpha,
                         std::span<const std::size_t> eligible, QueryLog& log) {
  return extract_piece(inst.graph, inst.agents, sub, alpha, eligible, log);
}

}  // namespace graphcake
