#include <array>

#include "graphcake/errors.hpp"
#include "graphcake/protocols.hpp"
#include "protocols/common.hpp"

namespace graphcake {

ProtocolResult multi_piece_two(const Instance& inst, int k) {
  detail::require_agents(inst, 2, Mode::kCake, "multi2");
  if (k < 1) throw Error(ErrorKind::kBadParameters, "multi2 needs k >= 1");
  ProtocolResult r;
  const Valuation& v1 = inst.agents[0];
  const std::vector<Valuation> twice{v1, v1};
  constexpr std::array<std::size_t, 2> kBoth{0, 1};

  // Agent 1 splits the cake into two parts it values at least 1/3 each, then refines.
  Extraction first = extract_piece(inst.graph, twice, Piece::whole(inst.graph), Rational(1, 3), kBoth, r.queries);
  Piece small = first.piece, large = first.remainder;
  for (int round = 2; round <= k; ++round) {
    if (evaluate(v1, small, r.queries) > evaluate(v1, large, r.queries)) std::swap(small, large);
    const Rational x = Rational(1, 2) - evaluate(v1, small, r.queries);
    if (x == 0) break;
    Piece h;
    Rational best = -1;
    for (const Piece& component : connected_components(inst.graph, large)) {
      Rational value = evaluate(v1, component, r.queries);
      if (value > best) {
        best = value;
        h = component;
      }
    }
    Extraction moved = extract_piece(inst.graph, twice, h, 2 * x / 3, kBoth, r.queries);
    small = small.united(moved.piece);
    large = large.minus(moved.piece);
  }

  const bool second_takes_small =
      evaluate(inst.agents[1], small, r.queries) > evaluate(inst.agents[1], large, r.queries);
  r.allocation.pieces = second_takes_small ? std::vector<Piece>{large, small} : std::vector<Piece>{small, large};
  return r;
}

}  // namespace graphcake
