#pragma once

#include <cstddef>
#include <vector>

#include "graphcake/valuation.hpp"

namespace graphcake {

/// One piece per agent.
struct Allocation {
  std::vector<Piece> pieces;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

struct AgentReport {
  Rational value;
  bool connected = true;
  std::size_t piece_count = 0;
};

struct VerificationReport {
  std::vector<AgentReport> agents;
  bool disjoint = true;
  bool complete = true;
  Mode mode = Mode::kCake;
  /// Minimum value in cake mode, maximum cost in chore mode.
  Rational egalitarian;
  Rational inequity;
  std::size_t total_pieces = 0;

  bool all_connected() const;
  Rational min_value() const;
  Rational max_value() const;
};

/// Independent check of an allocation against an instance. Only consumes the instance and the
/// pieces; throws Error(MalformedPiece/UnknownEdge) when the allocation does not fit.
VerificationReport verify_allocation(const Instance& inst, const Allocation& a);

}  // namespace graphcake
