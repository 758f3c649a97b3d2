#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphcake/allocation.hpp"
#include "graphcake/topology.hpp"
#include "graphcake/valuation.hpp"

namespace graphcake {

struct ProtocolResult {
  Allocation allocation;
  QueryLog queries;
};

// ---------------------------------------------------------------------------
// Piece extraction

struct Extraction {
  Piece piece;
  /// Index into the measure list of the agent that reached the threshold.
  std::size_t winner = 0;
  Piece remainder;
};

/// Cuts the connected piece `sub` into two connected pieces. The winner values the first
/// piece at least `alpha`; every other eligible measure values it at most `2 * alpha`.
///
/// `sub` is turned into a tree rooted at its lowest vertex, the lowest vertex whose subtree is
/// worth `alpha` to some eligible measure but none of whose child subtrees are is located,
/// and then either a knife runs up the first sufficient branch (earliest stop, lowest index on
/// ties) or whole branches are accumulated until some measure reaches `alpha`.
/// Throws Error(InsufficientValue) if an eligible measure values `sub` below `alpha`.
Extraction extract_piece(const CakeGraph& g, std::span<const Valuation> measures, const Piece& sub,
                         const Rational& alpha, std::span<const std::size_t> eligible,
                         QueryLog& log);

Extraction extract_piece(const Instance& inst, const Piece& sub, const Rational& alpha,
                         std::span<const std::size_t> eligible, QueryLog& log);

// ---------------------------------------------------------------------------
// Any number of agents

/// Connected allocation with every agent at least 1/(2n-1).
ProtocolResult connected_egalitarian(const Instance& inst);

/// 1/(n + ceil(k/2) - 1) when k < 2n - 1, else 1/(2n - 1). Throws Error(DomainError) unless
/// n >= 2 and k >= 3.
Rational f_guarantee(long n, long k);

/// Centre vertex of a star with at least three edges, if `g` is one.
std::optional<VertexIndex> star_center(const CakeGraph& g);

/// Connected allocation on a k-edge star with welfare at least f_guarantee(n, k).
/// Throws Error(NotAStar).
ProtocolResult star_egalitarian(const Instance& inst);

// ---------------------------------------------------------------------------
// Two agents

/// Single knife sweep along a contiguous labeling; both agents get at least 1/2.
/// Throws Error(LabelingNotContiguous).
ProtocolResult proportional_two_connected(const Instance& inst, const OrientedLabeling& labeling);

/// Proportional on almost-bridgeless graphs, otherwise (>= 1/2, >= 1/3).
ProtocolResult two_agent_best(const Instance& inst);

/// Agent 1 gets at least 1/2 and agent 2 at least 1/3, both connected.
ProtocolResult two_agent_fixed(const Instance& inst);

struct EntitlementResult {
  ProtocolResult result;
  /// Agent guaranteed `alpha`; the other agent is guaranteed 1 - 2 alpha.
  std::size_t alpha_agent = 0;
  std::size_t complement_agent = 1;
};

/// Requires 0 < alpha <= 1/4, else Error(AlphaOutOfRange).
EntitlementResult two_agent_flexible(const Instance& inst, const Rational& alpha);

/// At most k+1 connected pieces in total and welfare at least 1/2 - 1/(2*3^k).
ProtocolResult multi_piece_two(const Instance& inst, int k);

/// Knife order of the height-two tree protocol rooted at `root`.
/// Throws Error(NotHeightTwoTree).
KnifeTrajectory height_two_sweep(const CakeGraph& g, VertexIndex root);

/// Proportional with at most two connected pieces per agent on trees of height <= 2.
ProtocolResult height2_two_piece_proportional(const Instance& inst, VertexIndex root);

/// Complete connected allocation with inequity at most 1/3.
ProtocolResult equitable_two(const Instance& inst);

// ---------------------------------------------------------------------------
// Chores

/// Agent 1 costs at most 1/2 and agent 2 at most 2/3.
ProtocolResult chore_two(const Instance& inst);

/// Three agents, egalitarian cost at most 1/2.
ProtocolResult chore_three(const Instance& inst);

/// Up to five agents, egalitarian cost at most 2/(n+1). Throws Error(TooManyAgents) for n > 5.
ProtocolResult chore_upto5(const Instance& inst);

// ---------------------------------------------------------------------------
// Named dispatch

struct ProtocolOptions {
  /// flex2
  std::optional<Rational> alpha;
  /// multi2
  std::optional<int> k;
  /// height2 root vertex id; defaults to a vertex from which the tree has height <= 2.
  std::optional<std::string> root;
};

/// A protocol's promise on one run, checked by `check_guarantee`.
struct Guarantee {
  /// Lower bound per agent (cake) or upper bound per agent (chore).
  std::vector<Rational> per_agent;
  bool connected = true;
  bool complete = true;
  std::optional<std::size_t> max_pieces_per_agent;
  std::optional<std::size_t> max_total_pieces;
  std::optional<Rational> max_inequity;
};

struct NamedRun {
  std::string protocol;
  ProtocolResult result;
  Guarantee guarantee;
};

/// Stable identifiers: egal, star, prop2, best2, fixed2, flex2, multi2, height2, equit2,
/// chore2, chore3, chore5.
const std::vector<std::string>& protocol_names();

/// Throws Error(UnknownProtocol) or the protocol's own precondition errors.
NamedRun run_protocol(std::string_view name, const Instance& inst, const ProtocolOptions& options = {});

/// Empty when the report honours the guarantee; otherwise one message per violation.
std::vector<std::string> check_guarantee(const Guarantee& guarantee, const VerificationReport& report);

}  // namespace graphcake
