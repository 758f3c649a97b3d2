#include "graphcake/allocation.hpp"

#include <algorithm>

#include "graphcake/errors.hpp"

namespace graphcake {

bool VerificationReport::all_connected() const {
  return std::all_of(agents.begin(), agents.end(), [](const AgentReport& a) { return a.connected; });
}

Rational VerificationReport::min_value() const {
  Rational best = agents.empty() ? Rational(0) : agents.front().value;
  for (const auto& a : agents) best = std::min(best, a.value);
  return best;
}

Rational VerificationReport::max_value() const {
  Rational best = agents.empty() ? Rational(0) : agents.front().value;
  for (const auto& a : agents) best = std::max(best, a.value);
  return best;
}

VerificationReport verify_allocation(const Instance& inst, const Allocation& a) {
  if (a.pieces.size() != inst.agent_count()) {
    throw Error(ErrorKind::kMalformedPiece, "allocation has " + std::to_string(a.pieces.size()) +
                                                " pieces for " + std::to_string(inst.agent_count()) + " agents");
  }
  VerificationReport report;
  report.mode = inst.mode;
  Piece allocated;
  for (std::size_t i = 0; i < a.pieces.size(); ++i) {
    const Piece& p = a.pieces[i];
    check_piece(inst.graph, p);
    AgentReport agent;
    agent.value = value_of_piece(inst.agents[i], p);
    agent.piece_count = connected_component_count(inst.graph, p);
    agent.connected = agent.piece_count <= 1;
    report.total_pieces += agent.piece_count;
    report.agents.push_back(agent);
    if (!allocated.intersected(p).empty()) report.disjoint = false;
    allocated = allocated.united(p);
  }
  report.complete = allocated == Piece::whole(inst.graph);
  report.egalitarian = inst.mode == Mode::kCake ? report.min_value() : report.max_value();
  report.inequity = report.max_value() - report.min_value();
  return report;
}

}  // namespace graphcake
