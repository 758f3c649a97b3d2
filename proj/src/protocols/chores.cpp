#include <algorithm>
#include <numeric>

#include "graphcake/errors.hpp"
#include "graphcake/protocols.hpp"
#include "protocols/common.hpp"

namespace graphcake {

namespace {

void solve_chore_stage(const detail::Stage& stage, Allocation& out, QueryLog& log);

/// Hands `piece` (stage coordinates) to the stage agents at `positions`, renormalizing their
/// costs. An agent with no cost for the piece takes all of it; an empty piece leaves everyone
/// with nothing.
void solve_sub_chore(const detail::Stage& stage, const Piece& piece, const std::vector<std::size_t>& positions,
                     Allocation& out, QueryLog& log) {
  if (positions.empty()) {
    if (!piece.empty()) throw std::logic_error("sub-chore without agents");
    return;
  }
  if (piece.empty()) return;
  for (std::size_t p : positions) {
    if (evaluate(stage.valuations[p], piece, log) == 0) {
      detail::assign(out, stage, p, piece);
      return;
    }
  }
  solve_chore_stage(detail::sub_stage(stage, piece, positions), out, log);
}

ProtocolResult chore_two_costs(const Instance& inst) {
  Instance as_cake{inst.graph, inst.agents, Mode::kCake};
  ProtocolResult r = two_agent_fixed(as_cake);
  std::swap(r.allocation.pieces[0], r.allocation.pieces[1]);
  return r;
}

/// Stage agents ordered by cost (ties by position), with their costs.
struct SortedCosts {
  std::vector<std::size_t> positions;
  std::vector<Rational> costs;
};

SortedCosts sort_costs(const std::vector<Rational>& cost) {
  SortedCosts s;
  s.positions.resize(cost.size());
  std::iota(s.positions.begin(), s.positions.end(), std::size_t{0});
  std::stable_sort(s.positions.begin(), s.positions.end(),
                   [&](std::size_t a, std::size_t b) { return cost[a] < cost[b]; });
  for (std::size_t p : s.positions) s.costs.push_back(cost[p]);
  return s;
}

/// Threshold of the first condition for the i-th smallest cost (1-based).
Rational condition1_bound(std::size_t i, std::size_t n) {
  return Rational(static_cast<long>(i == 1 ? 1 : i - 1), static_cast<long>(n + 1));
}

/// Smallest 1-based index whose first-condition inequality fails, or 0 when all hold.
std::size_t condition1_failure(const SortedCosts& s) {
  const std::size_t n = s.costs.size();
  for (std::size_t i = 1; i <= n; ++i) {
    if (s.costs[i - 1] > condition1_bound(i, n)) return i;
  }
  return 0;
}

/// Smallest 1-based index whose second-condition inequality fails, or 0 when all hold.
std::size_t condition2_failure(const SortedCosts& s) {
  const std::size_t n = s.costs.size();
  for (std::size_t i = 1; i <= n; ++i) {
    const Rational bound(static_cast<long>(i < n ? i + 1 : n), static_cast<long>(n + 1));
    if (!(s.costs[i - 1] > bound)) return i;
  }
  return 0;
}

std::vector<std::size_t> slice(const SortedCosts& s, std::size_t from, std::size_t to) {
  std::vector<std::size_t> out(s.positions.begin() + static_cast<std::ptrdiff_t>(from),
                               s.positions.begin() + static_cast<std::ptrdiff_t>(to));
  std::sort(out.begin(), out.end());
  return out;
}

/// `piece` goes to the `split` cheapest agents, the rest of the stage to the others.
void split_off(const detail::Stage& stage, const Piece& piece, const SortedCosts& s, std::size_t split,
               Allocation& out, QueryLog& log) {
  solve_sub_chore(stage, piece, slice(s, 0, split), out, log);
  solve_sub_chore(stage, Piece::whole(stage.graph).minus(piece), slice(s, split, s.positions.size()), out, log);
}

void solve_up_to_five(const detail::Stage& stage, Allocation& out, QueryLog& log) {
  const std::size_t n = stage.agents.size();
  const TreeSplit split = split_cycles_to_tree(stage.graph);
  const CakeGraph& tree = split.tree;
  const detail::RootedTree rt = detail::root_tree(tree, 0);

  std::vector<std::vector<Rational>> edge_cost(n), subtree(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (EdgeIndex e = 0; e < tree.edge_count(); ++e) {
      edge_cost[p].push_back(evaluate(stage.valuations[p], Piece::full_edge(e), log));
    }
    subtree[p] = detail::subtree_sums(rt, edge_cost[p]);
  }
  auto profile = [&](auto&& cost_of) {
    std::vector<Rational> c;
    for (std::size_t p = 0; p < n; ++p) c.push_back(cost_of(p));
    return sort_costs(c);
  };

  VertexIndex v = rt.root;
  for (bool descended = true; descended;) {
    descended = false;
    for (const Incidence& c : rt.children[v]) {
      if (condition1_failure(profile([&](std::size_t p) { return subtree[p][c.other]; })) != 0) {
        v = c.other;
        descended = true;
        break;
      }
    }
  }

  for (const Incidence& c : rt.children[v]) {
    auto branch = [&](std::size_t p) { return subtree[p][c.other] + edge_cost[p][c.edge]; };
    if (condition1_failure(profile(branch)) == 0) continue;
    // Case 1: knife from the child towards v until an inequality of the first condition is tight.
    KnifeTrajectory t{{detail::leg_from(tree, c.edge, c.other)}};
    std::optional<Rational> best;
    std::size_t tight = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      const Rational bound = condition1_bound(i, n);
      std::vector<Rational> reach;
      for (std::size_t p = 0; p < n; ++p) {
        if (branch(p) < bound) continue;
        const Rational need = bound - subtree[p][c.other];
        reach.push_back(need <= 0 ? Rational(0) : leg_progress(t, cut(stage.valuations[p], t, need, log)));
      }
      // The i-th smallest cost reaches its bound once n-i+1 agents have.
      const std::size_t needed = n - i + 1;
      if (reach.size() < needed) continue;
      std::sort(reach.begin(), reach.end());
      const Rational& when = reach[needed - 1];
      if (!best || when < *best) {
        best = when;
        tight = i;
      }
    }
    if (!best) throw std::logic_error("chore_upto5: knife never tightens the first condition");
    const KnifeLeg& leg = t.legs[0];
    const KnifeStop stop{0, leg.from < leg.to ? *best : Rational(1 - *best)};
    const Piece piece = detail::subtree_piece(rt, c.other).united(prefix_piece(t, stop));
    const SortedCosts s = profile([&](std::size_t p) { return evaluate(stage.valuations[p], piece, log); });
    split_off(stage, piece, s, tight == 1 ? 1 : tight - 1, out, log);
    return;
  }

  // Case 2: accumulate branches until the first condition fails.
  Piece acc;
  std::vector<Rational> acc_cost(n, Rational(0));
  for (const Incidence& c : rt.children[v]) {
    acc = acc.united(detail::branch_piece(rt, c));
    for (std::size_t p = 0; p < n; ++p) acc_cost[p] += subtree[p][c.other] + edge_cost[p][c.edge];
    const SortedCosts s = sort_costs(acc_cost);
    const std::size_t i = condition1_failure(s);
    if (i == 0) continue;
    if (i >= 2) {
      split_off(stage, acc, s, i - 1, out, log);
      return;
    }
    const std::size_t j = condition2_failure(s);
    if (j == 0 || j == n) throw std::logic_error("chore_upto5: accumulated branches satisfy the second condition");
    split_off(stage, acc, s, j, out, log);
    return;
  }
  throw std::logic_error("chore_upto5: branches of v never violate the first condition");
}

void solve_chore_stage(const detail::Stage& stage, Allocation& out, QueryLog& log) {
  const std::size_t n = stage.agents.size();
  if (n == 1) {
    detail::assign(out, stage, 0, Piece::whole(stage.graph));
  } else if (n == 2) {
    ProtocolResult r = chore_two_costs(detail::stage_instance(stage, Mode::kChore));
    log += r.queries;
    for (std::size_t p = 0; p < 2; ++p) detail::assign(out, stage, p, r.allocation.pieces[p]);
  } else {
    solve_up_to_five(stage, out, log);
  }
}

}  // namespace

ProtocolResult chore_two(const Instance& inst) {
  detail::require_agents(inst, 2, Mode::kChore, "chore2");
  return chore_two_costs(inst);
}

ProtocolResult chore_three(const Instance& inst) {
  detail::require_agents(inst, 3, Mode::kChore, "chore3");
  ProtocolResult r;
  r.allocation.pieces.resize(3);
  const detail::Stage root = detail::root_stage(inst);
  Instance first_two{inst.graph, {inst.agents[0], inst.agents[1]}, Mode::kChore};
  ProtocolResult head = chore_two_costs(first_two);
  r.queries += head.queries;
  r.allocation.pieces[0] = head.allocation.pieces[0];
  const Piece& rest = head.allocation.pieces[1];
  if (rest.empty()) return r;
  // Agent 3 plays the first role on agent 2's piece, agent 2 the second.
  for (std::size_t p : {std::size_t{2}, std::size_t{1}}) {
    if (evaluate(inst.agents[p], rest, r.queries) == 0) {
      r.allocation.pieces[p] = rest;
      return r;
    }
  }
  detail::Stage sub = detail::sub_stage(root, rest, {2, 1});
  ProtocolResult tail = chore_two_costs(detail::stage_instance(sub, Mode::kChore));
  r.queries += tail.queries;
  for (std::size_t p = 0; p < 2; ++p) detail::assign(r.allocation, sub, p, tail.allocation.pieces[p]);
  return r;
}

ProtocolResult chore_upto5(const Instance& inst) {
  detail::require_mode(inst, Mode::kChore, "chore5");
  if (inst.agent_count() > 5) {
    throw Error(ErrorKind::kTooManyAgents, "the 2/(n+1) protocol covers at most five agents");
  }
  ProtocolResult r;
  r.allocation.pieces.resize(inst.agent_count());
  solve_chore_stage(detail::root_stage(inst), r.allocation, r.queries);
  return r;
}

}  // namespace graphcake
