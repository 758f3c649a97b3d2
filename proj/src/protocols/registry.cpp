#include <algorithm>

#include "graphcake/errors.hpp"
#include "graphcake/protocols.hpp"

namespace graphcake {

const std::vector<std::string>& protocol_names() {
  static const std::vector<std::string> names{"egal",    "star",    "prop2",  "best2",  "fixed2", "flex2",
                                              "multi2",  "height2", "equit2", "chore2", "chore3", "chore5"};
  return names;
}

namespace {

Guarantee uniform_guarantee(std::size_t n, const Rational& bound) {
  Guarantee g;
  g.per_agent.assign(n, bound);
  return g;
}

VertexIndex default_height_two_root(const CakeGraph& g) {
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    try {
      height_two_sweep(g, v);
      return v;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::kNotHeightTwoTree, "no vertex roots the graph as a tree of height at most two");
}

}  // namespace

NamedRun run_protocol(std::string_view name, const Instance& inst, const ProtocolOptions& options) {
  validate_instance(inst);
  const std::size_t n = inst.agent_count();
  NamedRun run{std::string(name), {}, {}};
  if (name == "egal") {
    run.result = connected_egalitarian(inst);
    run.guarantee = uniform_guarantee(n, Rational(1, static_cast<long>(2 * n - 1)));
  } else if (name == "star") {
    run.result = star_egalitarian(inst);
    run.guarantee = uniform_guarantee(
        n, n == 1 ? Rational(1) : f_guarantee(static_cast<long>(n), static_cast<long>(inst.graph.edge_count())));
  } else if (name == "prop2") {
    run.result = proportional_two_connected(inst, compute_contiguous_labeling(inst.graph));
    run.guarantee = uniform_guarantee(n, Rational(1, 2));
  } else if (name == "best2") {
    run.result = two_agent_best(inst);
    const bool proportional = is_almost_bridgeless(classify_almost_bridgeless(inst.graph));
    run.guarantee.per_agent = {Rational(1, 2), proportional ? Rational(1, 2) : Rational(1, 3)};
  } else if (name == "fixed2") {
    run.result = two_agent_fixed(inst);
    run.guarantee.per_agent = {Rational(1, 2), Rational(1, 3)};
  } else if (name == "flex2") {
    const Rational alpha = options.alpha.value_or(Rational(1, 4));
    EntitlementResult e = two_agent_flexible(inst, alpha);
    run.result = std::move(e.result);
    run.guarantee.per_agent.assign(2, Rational(0));
    run.guarantee.per_agent[e.alpha_agent] = alpha;
    run.guarantee.per_agent[e.complement_agent] = 1 - 2 * alpha;
  } else if (name == "multi2") {
    const int k = options.k.value_or(1);
    run.result = multi_piece_two(inst, k);
    Rational power = 1;
    for (int i = 0; i < k; ++i) power *= 3;
    run.guarantee = uniform_guarantee(n, Rational(1, 2) - 1 / (2 * power));
    run.guarantee.connected = false;
    run.guarantee.max_total_pieces = static_cast<std::size_t>(k) + 1;
  } else if (name == "height2") {
    VertexIndex root = 0;
    if (options.root) {
      auto found = inst.graph.find_vertex(*options.root);
      if (!found) throw Error(ErrorKind::kBadParameters, "unknown root vertex '" + *options.root + "'");
      root = *found;
    } else {
      root = default_height_two_root(inst.graph);
    }
    run.result = height2_two_piece_proportional(inst, root);
    run.guarantee = uniform_guarantee(n, Rational(1, 2));
    run.guarantee.connected = false;
    run.guarantee.max_pieces_per_agent = 2;
  } else if (name == "equit2") {
    run.result = equitable_two(inst);
    run.guarantee = uniform_guarantee(n, Rational(0));
    run.guarantee.max_inequity = Rational(1, 3);
  } else if (name == "chore2") {
    run.result = chore_two(inst);
    run.guarantee.per_agent = {Rational(1, 2), Rational(2, 3)};
  } else if (name == "chore3") {
    run.result = chore_three(inst);
    run.guarantee = uniform_guarantee(n, Rational(1, 2));
  } else if (name == "chore5") {
    run.result = chore_upto5(inst);
    run.guarantee = uniform_guarantee(n, Rational(2, static_cast<long>(n + 1)));
  } else {
    throw Error(ErrorKind::kUnknownProtocol, "unknown protocol '" + std::string(name) + "'");
  }
  return run;
}

std::vector<std::string> check_guarantee(const Guarantee& guarantee, const VerificationReport& report) {
  std::vector<std::string> problems;
  const bool chore = report.mode == Mode::kChore;
  for (std::size_t i = 0; i < guarantee.per_agent.size() && i < report.agents.size(); ++i) {
    const Rational& got = report.agents[i].value;
    const Rational& bound = guarantee.per_agent[i];
    if (chore ? got > bound : got < bound) {
      problems.push_back("agent " + std::to_string(i + 1) + (chore ? " cost " : " value ") + format_rational(got) +
                         (chore ? " exceeds " : " is below ") + format_rational(bound));
    }
  }
  if (!report.disjoint) problems.push_back("pieces overlap");
  if (guarantee.complete && !report.complete) problems.push_back("allocation is not complete");
  if (guarantee.connected && !report.all_connected()) problems.push_back("some piece is disconnected");
  if (guarantee.max_pieces_per_agent) {
    for (std::size_t i = 0; i < report.agents.size(); ++i) {
      if (report.agents[i].piece_count > *guarantee.max_pieces_per_agent) {
        problems.push_back("agent " + std::to_string(i + 1) + " holds " +
                           std::to_string(report.agents[i].piece_count) + " pieces");
      }
    }
  }
  if (guarantee.max_total_pieces && report.total_pieces > *guarantee.max_total_pieces) {
    problems.push_back(std::to_string(report.total_pieces) + " pieces in total, limit " +
                       std::to_string(*guarantee.max_total_pieces));
  }
  if (guarantee.max_inequity && report.inequity > *guarantee.max_inequity) {
    problems.push_back("inequity " + format_rational(report.inequity) + " exceeds " +
                       format_rational(*guarantee.max_inequity));
  }
  return problems;
}

}  // namespace graphcake
