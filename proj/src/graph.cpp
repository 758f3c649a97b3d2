#include "graphcake/graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "graphcake/errors.hpp"
#include "union_find.hpp"

namespace graphcake {

CakeGraph::CakeGraph(std::vector<std::string> vertex_ids,
                     const std::vector<std::tuple<std::string, std::string, std::string>>& edges)
    : vertex_ids_(std::move(vertex_ids)) {
  for (VertexIndex v = 0; v < vertex_ids_.size(); ++v) {
    if (!vertex_lookup_.emplace(vertex_ids_[v], v).second) {
      throw Error(ErrorKind::kInvalidGraph, "duplicate vertex id '" + vertex_ids_[v] + "'");
    }
  }
  edges_.reserve(edges.size());
  for (const auto& [id, u, v] : edges) {
    auto iu = vertex_lookup_.find(u);
    auto iv = vertex_lookup_.find(v);
    if (iu == vertex_lookup_.end() || iv == vertex_lookup_.end()) {
      throw Error(ErrorKind::kInvalidGraph, "edge '" + id + "' references an unknown vertex");
    }
    edges_.push_back(Edge{id, iu->second, iv->second});
  }
  build();
}

CakeGraph::CakeGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges)
    : vertex_ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
  for (VertexIndex v = 0; v < vertex_ids_.size(); ++v) {
    if (!vertex_lookup_.emplace(vertex_ids_[v], v).second) {
      throw Error(ErrorKind::kInvalidGraph, "duplicate vertex id '" + vertex_ids_[v] + "'");
    }
  }
  for (const Edge& e : edges_) {
    if (e.u >= vertex_ids_.size() || e.v >= vertex_ids_.size()) {
      throw Error(ErrorKind::kInvalidGraph, "edge '" + e.id + "' references an unknown vertex");
    }
  }
  build();
}

void CakeGraph::build() {
  if (edges_.empty()) throw Error(ErrorKind::kInvalidGraph, "a cake needs at least one edge");
  adjacency_.assign(vertex_ids_.size(), {});
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.u == edge.v) {
      throw Error(ErrorKind::kInvalidGraph, "edge '" + edge.id + "' is a loop; subdivide it first");
    }
    if (!edge_lookup_.emplace(edge.id, e).second) {
      throw Error(ErrorKind::kInvalidGraph, "duplicate edge id '" + edge.id + "'");
    }
    adjacency_[edge.u].push_back({e, edge.v});
    adjacency_[edge.v].push_back({e, edge.u});
  }
  detail::UnionFind uf(vertex_ids_.size());
  for (const Edge& edge : edges_) uf.unite(edge.u, edge.v);
  for (VertexIndex v = 1; v < vertex_ids_.size(); ++v) {
    if (!uf.same(0, v)) throw Error(ErrorKind::kInvalidGraph, "graph is not connected");
  }
}

VertexIndex CakeGraph::other_end(EdgeIndex e, VertexIndex v) const {
  const Edge& edge = edges_.at(e);
  return edge.u == v ? edge.v : edge.u;
}

std::optional<VertexIndex> CakeGraph::find_vertex(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> CakeGraph::find_edge(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

Point point_on_edge(const CakeGraph& g, EdgeIndex e, const Rational& position) {
  if (position == 0) return VertexPoint{g.edge(e).u};
  if (position == 1) return VertexPoint{g.edge(e).v};
  return EdgePoint{e, position};
}

// ---------------------------------------------------------------------------

Piece::Piece(std::vector<Interval> intervals) {
  for (Interval& iv : intervals) {
    if (iv.lo > iv.hi) std::swap(iv.lo, iv.hi);
    if (iv.lo < 0 || iv.hi > 1) {
      throw Error(ErrorKind::kMalformedPiece, "interval outside [0,1] on edge " + std::to_string(iv.edge));
    }
  }
  std::erase_if(intervals, [](const Interval& iv) { return iv.lo == iv.hi; });
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    return std::tie(a.edge, a.lo) < std::tie(b.edge, b.lo);
  });
  for (Interval& iv : intervals) {
    if (!intervals_.empty() && intervals_.back().edge == iv.edge && iv.lo <= intervals_.back().hi) {
      if (iv.hi > intervals_.back().hi) intervals_.back().hi = iv.hi;
    } else {
      intervals_.push_back(std::move(iv));
    }
  }
}

Piece Piece::whole(const CakeGraph& g) {
  std::vector<Interval> all;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) all.push_back({e, 0, 1});
  return Piece(std::move(all));
}

Piece Piece::full_edge(EdgeIndex e) { return Piece({Interval{e, 0, 1}}); }

Rational Piece::measure() const {
  Rational total = 0;
  for (const Interval& iv : intervals_) total += iv.length();
  return total;
}

std::vector<Interval> Piece::on_edge(EdgeIndex e) const {
  std::vector<Interval> out;
  for (const Interval& iv : intervals_) {
    if (iv.edge == e) out.push_back(iv);
  }
  return out;
}

Piece Piece::united(const Piece& other) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return Piece(std::move(all));
}

Piece Piece::minus(const Piece& other) const {
  std::vector<Interval> out;
  for (const Interval& iv : intervals_) {
    Rational cursor = iv.lo;
    for (const Interval& cut : other.intervals_) {
      if (cut.edge != iv.edge || cut.hi <= cursor || cut.lo >= iv.hi) continue;
      if (cut.lo > cursor) out.push_back({iv.edge, cursor, cut.lo});
      cursor = std::max(cursor, cut.hi);
      if (cursor >= iv.hi) break;
    }
    if (cursor < iv.hi) out.push_back({iv.edge, cursor, iv.hi});
  }
  return Piece(std::move(out));
}

Piece Piece::intersected(const Piece& other) const {
  std::vector<Interval> out;
  for (const Interval& a : intervals_) {
    for (const Interval& b : other.intervals_) {
      if (a.edge != b.edge) continue;
      Rational lo = std::max(a.lo, b.lo);
      Rational hi = std::min(a.hi, b.hi);
      if (lo < hi) out.push_back({a.edge, lo, hi});
    }
  }
  return Piece(std::move(out));
}

void check_piece(const CakeGraph& g, const Piece& p) {
  for (const Interval& iv : p.intervals()) {
    if (iv.edge >= g.edge_count()) {
      throw Error(ErrorKind::kUnknownEdge, "edge index " + std::to_string(iv.edge) + " not in graph");
    }
  }
}

namespace {

// Interval i is node i; vertex v is node intervals.size() + v.
detail::UnionFind interval_components(const CakeGraph& g, const Piece& p) {
  const auto& ivs = p.intervals();
  detail::UnionFind uf(ivs.size() + g.vertex_count());
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    const Edge& e = g.edge(ivs[i].edge);
    if (ivs[i].lo == 0) uf.unite(i, ivs.size() + e.u);
    if (ivs[i].hi == 1) uf.unite(i, ivs.size() + e.v);
  }
  return uf;
}

}  // namespace

bool piece_is_connected(const CakeGraph& g, const Piece& p) {
  return connected_component_count(g, p) <= 1;
}

std::size_t connected_component_count(const CakeGraph& g, const Piece& p) {
  check_piece(g, p);
  auto uf = interval_components(g, p);
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < p.intervals().size(); ++i) roots.push_back(uf.find(i));
  std::sort(roots.begin(), roots.end());
  return static_cast<std::size_t>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

std::vector<Piece> connected_components(const CakeGraph& g, const Piece& p) {
  check_piece(g, p);
  auto uf = interval_components(g, p);
  std::vector<std::size_t> root_order;
  std::vector<std::vector<Interval>> groups;
  const auto& ivs = p.intervals();
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    std::size_t r = uf.find(i);
    auto it = std::find(root_order.begin(), root_order.end(), r);
    if (it == root_order.end()) {
      root_order.push_back(r);
      groups.push_back({ivs[i]});
    } else {
      groups[static_cast<std::size_t>(it - root_order.begin())].push_back(ivs[i]);
    }
  }
  std::vector<Piece> out;
  for (auto& grp : groups) out.emplace_back(std::move(grp));
  return out;
}

}  // namespace graphcake
