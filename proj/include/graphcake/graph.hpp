#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <variant>
#include <vector>

#include "graphcake/rational.hpp"

namespace graphcake {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

/// An edge is the interval [0,1] with position 0 at `u` and 1 at `v`.
struct Edge {
  std::string id;
  VertexIndex u = 0;
  VertexIndex v = 0;
};

struct Incidence {
  EdgeIndex edge;
  VertexIndex other;
};

/// Connected loopless multigraph whose edges are the divisible resource.
///
/// Vertices and edges are addressed by their position in the input order; the
/// string ids are kept for I/O. Instances are immutable once constructed and
/// construction rejects empty, disconnected or looped graphs.
class CakeGraph {
 public:
  /// Edges are given as (id, u-id, v-id). Throws Error(InvalidGraph).
  CakeGraph(std::vector<std::string> vertex_ids,
            const std::vector<std::tuple<std::string, std::string, std::string>>& edges);

  /// Index-based construction used by graph surgeries.
  CakeGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_.at(v); }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }

  /// Incident edges of `v` ordered by edge index.
  const std::vector<Incidence>& incident(VertexIndex v) const { return adjacency_.at(v); }
  std::size_t degree(VertexIndex v) const { return adjacency_.at(v).size(); }

  VertexIndex other_end(EdgeIndex e, VertexIndex v) const;
  bool touches(EdgeIndex e, VertexIndex v) const { return edges_[e].u == v || edges_[e].v == v; }

  std::optional<VertexIndex> find_vertex(const std::string& id) const;
  std::optional<EdgeIndex> find_edge(const std::string& id) const;

 private:
  void build();

  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

struct VertexPoint {
  VertexIndex vertex;
  friend bool operator==(const VertexPoint&, const VertexPoint&) = default;
};

struct EdgePoint {
  EdgeIndex edge;
  Rational position;  // strictly inside (0,1) when canonical
  friend bool operator==(const EdgePoint& a, const EdgePoint& b) {
    return a.edge == b.edge && a.position == b.position;
  }
};

/// A point of the cake. Canonical form never holds an EdgePoint at position 0 or 1.
using Point = std::variant<VertexPoint, EdgePoint>;

/// Canonical point at `position` along edge `e`.
Point point_on_edge(const CakeGraph& g, EdgeIndex e, const Rational& position);

struct Interval {
  EdgeIndex edge = 0;
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.edge == b.edge && a.lo == b.lo && a.hi == b.hi;
  }
};

/// Finite union of closed intervals, kept canonical: sorted by (edge, lo), zero-length
/// intervals dropped, overlapping or touching intervals on the same edge merged.
class Piece {
 public:
  Piece() = default;
  explicit Piece(std::vector<Interval> intervals);

  static Piece whole(const CakeGraph& g);
  static Piece full_edge(EdgeIndex e);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }

  /// Total length (sum of interval lengths, each edge has length 1).
  Rational measure() const;
  std::vector<Interval> on_edge(EdgeIndex e) const;

  Piece united(const Piece& other) const;
  Piece minus(const Piece& other) const;
  Piece intersected(const Piece& other) const;

  friend bool operator==(const Piece&, const Piece&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Throws Error(UnknownEdge) or Error(MalformedPiece) when `p` does not fit `g`.
void check_piece(const CakeGraph& g, const Piece& p);

/// True when any two points of `p` are joined inside `p`. The empty piece is connected.
bool piece_is_connected(const CakeGraph& g, const Piece& p);

/// Number of connected components of `p` (0 for the empty piece).
std::size_t connected_component_count(const CakeGraph& g, const Piece& p);

/// Splits `p` into its connected components, ordered by their first interval.
std::vector<Piece> connected_components(const CakeGraph& g, const Piece& p);

}  // namespace graphcake
