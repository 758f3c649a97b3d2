#include "protocols/common.hpp"

#include <string>

#include "graphcake/errors.hpp"

namespace graphcake::detail {

Stage root_stage(const Instance& inst) {
  Stage s{inst.graph, CoordinateMap::identity(inst.graph), {}, inst.agents};
  for (std::size_t i = 0; i < inst.agent_count(); ++i) s.agents.push_back(i);
  return s;
}

Stage sub_stage(const Stage& stage, const Piece& piece, const std::vector<std::size_t>& positions) {
  InducedCake ic = induced_cake(stage.graph, piece);
  Stage out{ic.graph, ic.map.then(stage.to_root), {}, {}};
  for (std::size_t pos : positions) {
    out.agents.push_back(stage.agents[pos]);
    out.valuations.push_back(restrict_and_renormalize(stage.valuations[pos], piece, ic.map));
  }
  return out;
}

Instance stage_instance(const Stage& stage, Mode mode) { return Instance{stage.graph, stage.valuations, mode}; }

void assign(Allocation& out, const Stage& stage, std::size_t agent, const Piece& piece) {
  out.pieces[stage.agents[agent]] = stage.to_root.to_parent(piece);
}

void require_mode(const Instance& inst, Mode mode, std::string_view protocol) {
  if (inst.mode != mode) {
    throw Error(ErrorKind::kPreconditionFailed,
                std::string(protocol) + " expects a " + (mode == Mode::kCake ? "cake" : "chore") + " instance");
  }
}

void require_agents(const Instance& inst, std::size_t n, Mode mode, std::string_view protocol) {
  require_mode(inst, mode, protocol);
  if (inst.agent_count() != n) {
    throw Error(ErrorKind::kPreconditionFailed,
                std::string(protocol) + " needs exactly " + std::to_string(n) + " agents");
  }
}

RootedTree root_tree(const CakeGraph& tree, VertexIndex root) {
  RootedTree t;
  t.root = root;
  t.parent.assign(tree.vertex_count(), root);
  t.parent_edge.assign(tree.vertex_count(), std::nullopt);
  t.children.assign(tree.vertex_count(), {});
  std::vector<bool> seen(tree.vertex_count(), false);
  std::vector<VertexIndex> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    VertexIndex x = stack.back();
    stack.pop_back();
    t.order.push_back(x);
    for (const Incidence& inc : tree.incident(x)) {
      if (t.parent_edge[x] == inc.edge) continue;
      if (seen[inc.other]) throw std::logic_error("root_tree: graph has a cycle");
      seen[inc.other] = true;
      t.parent[inc.other] = x;
      t.parent_edge[inc.other] = inc.edge;
      t.children[x].push_back(inc);
    }
    for (auto it = t.children[x].rbegin(); it != t.children[x].rend(); ++it) stack.push_back(it->other);
  }
  return t;
}

Piece subtree_piece(const RootedTree& t, VertexIndex x) {
  std::vector<Interval> out;
  std::vector<VertexIndex> stack{x};
  while (!stack.empty()) {
    VertexIndex y = stack.back();
    stack.pop_back();
    for (const Incidence& c : t.children[y]) {
      out.push_back({c.edge, 0, 1});
      stack.push_back(c.other);
    }
  }
  return Piece(std::move(out));
}

Piece branch_piece(const RootedTree& t, const Incidence& child) {
  return subtree_piece(t, child.other).united(Piece::full_edge(child.edge));
}

std::vector<Rational> subtree_sums(const RootedTree& t, const std::vector<Rational>& edge_values) {
  std::vector<Rational> sums(t.parent.size(), Rational(0));
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    for (const Incidence& c : t.children[*it]) sums[*it] += edge_values[c.edge] + sums[c.other];
  }
  return sums;
}

KnifeLeg leg_from(const CakeGraph& g, EdgeIndex edge, VertexIndex from) {
  return g.edge(edge).u == from ? KnifeLeg{edge, 0, 1} : KnifeLeg{edge, 1, 0};
}

KnifeOutcome knife_race(const std::vector<Valuation>& measures, const std::vector<KnifeRunner>& runners,
                        const KnifeTrajectory& t, QueryLog& log) {
  if (runners.empty()) throw std::logic_error("knife_race without runners");
  KnifeOutcome best{0, cut(measures[runners[0].measure], t, runners[0].target, log)};
  for (std::size_t r = 1; r < runners.size(); ++r) {
    const Valuation& v = measures[runners[r].measure];
    if (evaluate(v, prefix_piece(t, best.stop), log) < runners[r].target) continue;
    KnifeStop stop = cut(v, t, runners[r].target, log);
    if (stops_before(t, stop, best.stop)) best = KnifeOutcome{r, stop};
  }
  return best;
}

}  // namespace graphcake::detail
