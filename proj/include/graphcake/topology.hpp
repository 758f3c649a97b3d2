#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphcake/graph.hpp"

namespace graphcake {

/// Edges lying on no cycle, in increasing index order. Parallel edges are never bridges.
std::vector<EdgeIndex> find_bridges(const CakeGraph& g);

/// Component id per vertex after deleting every bridge (2-edge-connected components),
/// numbered in order of first appearance by vertex index.
std::vector<std::size_t> two_edge_connected_components(const CakeGraph& g);

/// Adding an edge between `x` and `y` leaves no bridge.
struct AlmostBridgeless {
  VertexIndex x;
  VertexIndex y;
};

/// No single path of the graph traverses all three bridges.
struct BridgeTriple {
  std::array<EdgeIndex, 3> bridges;
};

using AlmostBridgelessWitness = std::variant<AlmostBridgeless, BridgeTriple>;

/// Decides almost-bridgelessness through the bridge tree. A bridgeless graph reports the
/// endpoints of edge 0; otherwise the bridge tree is a path and the endpoints of its two
/// extreme bridges are reported, or a bridge-tree node of degree >= 3 supplies three bridges.
AlmostBridgelessWitness classify_almost_bridgeless(const CakeGraph& g);

inline bool is_almost_bridgeless(const AlmostBridgelessWitness& w) {
  return std::holds_alternative<AlmostBridgeless>(w);
}

/// Edge order plus orientation. `order[i]` is the edge carrying label i+1; `tail[e]` is the
/// endpoint of edge `e` labelled e^- (the knife enters there), the other endpoint is e^+.
struct OrientedLabeling {
  std::vector<EdgeIndex> order;
  std::vector<VertexIndex> tail;

  VertexIndex head(const CakeGraph& g, EdgeIndex e) const { return g.other_end(e, tail[e]); }
};

/// Both contiguity conditions: every prefix and suffix of the label order spans a connected
/// subgraph, the tail of label i touches labels 1..i-1, and the head of label i touches
/// labels i+1..m.
bool is_contiguous(const CakeGraph& g, const OrientedLabeling& labeling);

/// Builds a contiguous oriented labeling by ear insertion. Edge with label 1 touches the
/// first witness vertex and edge with label m touches the second.
/// Throws Error(NotAlmostBridgeless).
OrientedLabeling compute_contiguous_labeling(const CakeGraph& g);

struct BipolarSearch {
  /// label[v] in 1..k when a numbering was found.
  std::optional<std::vector<std::size_t>> numbering;
  /// True when the search space was fully explored (a missing numbering is then a proof).
  bool complete = false;
  std::size_t nodes_visited = 0;
};

struct BipolarSearchLimits {
  std::size_t max_vertices = 10;
  std::size_t max_nodes = 50'000'000;
};

/// Exhaustive search for a bipolar numbering. Throws Error(BudgetExceeded) if the graph has
/// more vertices than `limits.max_vertices`; stops early with complete=false after
/// `limits.max_nodes` search nodes.
BipolarSearch find_bipolar_numbering(const CakeGraph& g, BipolarSearchLimits limits = {});

bool is_bipolar_numbering(const CakeGraph& g, const std::vector<std::size_t>& label);

/// Graphviz rendering: edge label is the edge id, bridges are dashed.
std::string to_dot(const CakeGraph& g);

}  // namespace graphcake
