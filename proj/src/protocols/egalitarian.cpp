#include <numeric>

#include "graphcake/errors.hpp"
#include "graphcake/protocols.hpp"
#include "protocols/common.hpp"

namespace graphcake {

namespace {

std::vector<std::size_t> all_positions(const detail::Stage& s) {
  std::vector<std::size_t> out(s.agents.size());
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

/// Positions of `s` other than `skip`.
std::vector<std::size_t> all_but(const detail::Stage& s, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < s.agents.size(); ++p) {
    if (p != skip) out.push_back(p);
  }
  return out;
}

void egalitarian_stage(detail::Stage stage, Allocation& out, QueryLog& log) {
  while (stage.agents.size() > 1) {
    const long n = static_cast<long>(stage.agents.size());
    const Rational alpha(1, 2 * n - 1);
    const auto everyone = all_positions(stage);
    Extraction ex = extract_piece(stage.graph, stage.valuations, Piece::whole(stage.graph), alpha, everyone, log);
    detail::assign(out, stage, ex.winner, ex.piece);
    stage = detail::sub_stage(stage, ex.remainder, all_but(stage, ex.winner));
  }
  detail::assign(out, stage, 0, Piece::whole(stage.graph));
}

}  // namespace

ProtocolResult connected_egalitarian(const Instance& inst) {
  detail::require_mode(inst, Mode::kCake, "egal");
  ProtocolResult r;
  r.allocation.pieces.resize(inst.agent_count());
  egalitarian_stage(detail::root_stage(inst), r.allocation, r.queries);
  return r;
}

Rational f_guarantee(long n, long k) {
  if (n < 2 || k < 3) {
    throw Error(ErrorKind::kDomainError, "f(n,k) needs n >= 2 and k >= 3, got n=" + std::to_string(n) +
                                             ", k=" + std::to_string(k));
  }
  if (k < 2 * n - 1) return Rational(1, n + (k + 1) / 2 - 1);
  return Rational(1, 2 * n - 1);
}

std::optional<VertexIndex> star_center(const CakeGraph& g) {
  if (g.edge_count() < 3 || g.vertex_count() != g.edge_count() + 1) return std::nullopt;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == g.edge_count()) return v;
  }
  return std::nullopt;
}

ProtocolResult star_egalitarian(const Instance& inst) {
  detail::require_mode(inst, Mode::kCake, "star");
  const auto center = star_center(inst.graph);
  if (!center) throw Error(ErrorKind::kNotAStar, "graph is not a star with at least three edges");
  const std::string center_id = inst.graph.vertex_id(*center);
  const long k = static_cast<long>(inst.graph.edge_count());

  ProtocolResult r;
  r.allocation.pieces.resize(inst.agent_count());
  detail::Stage stage = detail::root_stage(inst);
  // The star keeps k logical edges (some possibly degenerate) while agents leave.
  while (stage.agents.size() > 1) {
    const long n = static_cast<long>(stage.agents.size());
    if (k >= 2 * n - 1) {
      egalitarian_stage(std::move(stage), r.allocation, r.queries);
      return r;
    }
    const Rational f = f_guarantee(n, k);
    const VertexIndex c = *stage.graph.find_vertex(center_id);
    std::optional<EdgeIndex> chosen;
    for (EdgeIndex e = 0; e < stage.graph.edge_count() && !chosen; ++e) {
      if (evaluate(stage.valuations[0], Piece::full_edge(e), r.queries) >= f) chosen = e;
    }
    if (!chosen) throw std::logic_error("star_egalitarian: no edge worth f to the first agent");
    KnifeTrajectory t{{detail::leg_from(stage.graph, *chosen, stage.graph.other_end(*chosen, c))}};
    std::vector<detail::KnifeRunner> runners;
    for (std::size_t p = 0; p < stage.agents.size(); ++p) {
      if (evaluate(stage.valuations[p], t.covered(), r.queries) >= f) runners.push_back({p, f});
    }
    detail::KnifeOutcome win = detail::knife_race(stage.valuations, runners, t, r.queries);
    const std::size_t winner = runners[win.winner].measure;
    Piece piece = prefix_piece(t, win.stop);
    detail::assign(r.allocation, stage, winner, piece);
    stage = detail::sub_stage(stage, Piece::whole(stage.graph).minus(piece), all_but(stage, winner));
  }
  detail::assign(r.allocation, stage, 0, Piece::whole(stage.graph));
  return r;
}

}  // namespace graphcake
