#pragma once

#include <vector>

#include "graphcake/graph.hpp"

namespace graphcake {

/// Where an edge of a derived cake lives in its parent: position t maps to
/// `from + t * (to - from)` on parent edge `edge`.
struct EdgeImage {
  EdgeIndex edge = 0;
  Rational from;
  Rational to;
};

/// Affine, edge-wise map from a derived cake to the cake it was cut from.
class CoordinateMap {
 public:
  CoordinateMap() = default;
  explicit CoordinateMap(std::vector<EdgeImage> images) : images_(std::move(images)) {}

  static CoordinateMap identity(const CakeGraph& g);

  const std::vector<EdgeImage>& images() const { return images_; }
  const EdgeImage& image(EdgeIndex child_edge) const { return images_.at(child_edge); }

  Rational parent_position(EdgeIndex child_edge, const Rational& t) const;
  Interval to_parent(const Interval& child) const;
  Piece to_parent(const Piece& child) const;
  /// The part of `parent` covered by the derived cake, in derived coordinates.
  Piece to_child(const Piece& parent) const;

  /// child -> this -> grandparent, where `parent_map` maps this map's target to its parent.
  CoordinateMap then(const CoordinateMap& parent_map) const;

 private:
  std::vector<EdgeImage> images_;
};

struct TreeSplit {
  /// Same edge indices and parametrisations as the input, acyclic.
  CakeGraph tree;
  /// Input vertex each tree vertex is glued to.
  std::vector<VertexIndex> origin;
};

/// Repeatedly detaches the `v` endpoint of the lowest-index edge that lies on a cycle onto a
/// fresh vertex, until the graph is a tree. Trees are returned unchanged.
TreeSplit split_cycles_to_tree(const CakeGraph& g);

struct InducedCake {
  CakeGraph graph;
  CoordinateMap map;  // induced -> original
};

/// Standalone cake made of the intervals of `p`, each re-parametrised to [0,1], with new
/// vertices at the interval endpoints. Throws Error(DisconnectedPiece) for a disconnected or
/// empty piece.
InducedCake induced_cake(const CakeGraph& g, const Piece& p);

}  // namespace graphcake
