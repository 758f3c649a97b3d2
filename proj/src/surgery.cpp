#include "graphcake/surgery.hpp"

#include <algorithm>
#include <unordered_set>

#include "graphcake/errors.hpp"
#include "union_find.hpp"

namespace graphcake {

CoordinateMap CoordinateMap::identity(const CakeGraph& g) {
  std::vector<EdgeImage> images;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) images.push_back({e, 0, 1});
  return CoordinateMap(std::move(images));
}

Rational CoordinateMap::parent_position(EdgeIndex child_edge, const Rational& t) const {
  const EdgeImage& img = image(child_edge);
  return img.from + t * (img.to - img.from);
}

Interval CoordinateMap::to_parent(const Interval& child) const {
  Rational a = parent_position(child.edge, child.lo);
  Rational b = parent_position(child.edge, child.hi);
  if (a > b) std::swap(a, b);
  return Interval{image(child.edge).edge, a, b};
}

Piece CoordinateMap::to_parent(const Piece& child) const {
  std::vector<Interval> out;
  for (const Interval& iv : child.intervals()) out.push_back(to_parent(iv));
  return Piece(std::move(out));
}

Piece CoordinateMap::to_child(const Piece& parent) const {
  std::vector<Interval> out;
  for (EdgeIndex c = 0; c < images_.size(); ++c) {
    const EdgeImage& img = images_[c];
    const Rational lo = std::min(img.from, img.to);
    const Rational hi = std::max(img.from, img.to);
    const Rational span = img.to - img.from;
    for (const Interval& iv : parent.on_edge(img.edge)) {
      Rational a = std::max(iv.lo, lo);
      Rational b = std::min(iv.hi, hi);
      if (a >= b) continue;
      Rational ta = (a - img.from) / span;
      Rational tb = (b - img.from) / span;
      if (ta > tb) std::swap(ta, tb);
      out.push_back({c, ta, tb});
    }
  }
  return Piece(std::move(out));
}

CoordinateMap CoordinateMap::then(const CoordinateMap& parent_map) const {
  std::vector<EdgeImage> composed;
  composed.reserve(images_.size());
  for (const EdgeImage& img : images_) {
    composed.push_back({parent_map.image(img.edge).edge, parent_map.parent_position(img.edge, img.from),
                        parent_map.parent_position(img.edge, img.to)});
  }
  return CoordinateMap(std::move(composed));
}

namespace {

std::string fresh_id(std::unordered_set<std::string>& taken, const std::string& base) {
  std::string id = base;
  for (int k = 1; taken.count(id) != 0; ++k) id = base + "~" + std::to_string(k);
  taken.insert(id);
  return id;
}

}  // namespace

TreeSplit split_cycles_to_tree(const CakeGraph& g) {
  // Detaching the lowest-index cycle edge first keeps exactly the spanning tree that Kruskal
  // builds from the highest index down.
  const std::size_t m = g.edge_count();
  detail::UnionFind uf(g.vertex_count());
  std::vector<bool> keep(m, false);
  for (EdgeIndex e = m; e-- > 0;) keep[e] = uf.unite(g.edge(e).u, g.edge(e).v);

  std::vector<std::string> ids = g.vertex_ids();
  std::unordered_set<std::string> taken(ids.begin(), ids.end());
  std::vector<VertexIndex> origin(ids.size());
  for (VertexIndex v = 0; v < ids.size(); ++v) origin[v] = v;
  std::vector<Edge> edges = g.edges();
  for (EdgeIndex e = 0; e < m; ++e) {
    if (keep[e]) continue;
    const VertexIndex v = edges[e].v;
    ids.push_back(fresh_id(taken, g.vertex_id(v) + "'"));
    origin.push_back(v);
    edges[e].v = ids.size() - 1;
  }
  return TreeSplit{CakeGraph(std::move(ids), std::move(edges)), std::move(origin)};
}

InducedCake induced_cake(const CakeGraph& g, const Piece& p) {
  check_piece(g, p);
  if (p.empty()) throw Error(ErrorKind::kDisconnectedPiece, "cannot induce a cake from an empty piece");
  if (!piece_is_connected(g, p)) throw Error(ErrorKind::kDisconnectedPiece, "piece is not connected");

  std::vector<bool> touched(g.vertex_count(), false);
  for (const Interval& iv : p.intervals()) {
    if (iv.lo == 0) touched[g.edge(iv.edge).u] = true;
    if (iv.hi == 1) touched[g.edge(iv.edge).v] = true;
  }
  std::vector<std::string> ids;
  std::unordered_set<std::string> taken(g.vertex_ids().begin(), g.vertex_ids().end());
  std::vector<VertexIndex> renumber(g.vertex_count(), 0);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!touched[v]) continue;
    renumber[v] = ids.size();
    ids.push_back(g.vertex_id(v));
  }

  std::vector<Edge> edges;
  std::vector<EdgeImage> images;
  std::unordered_set<std::string> edge_ids;
  for (const Edge& e : g.edges()) edge_ids.insert(e.id);
  for (const Interval& iv : p.intervals()) {
    const Edge& parent = g.edge(iv.edge);
    auto endpoint = [&](const Rational& pos, VertexIndex at_vertex) {
      if ((pos == 0 && at_vertex == parent.u) || (pos == 1 && at_vertex == parent.v)) {
        return renumber[at_vertex];
      }
      ids.push_back(fresh_id(taken, parent.id + "@" + format_rational(pos)));
      return ids.size() - 1;
    };
    const VertexIndex a = iv.lo == 0 ? endpoint(iv.lo, parent.u) : endpoint(iv.lo, g.vertex_count());
    const VertexIndex b = iv.hi == 1 ? endpoint(iv.hi, parent.v) : endpoint(iv.hi, g.vertex_count());
    const bool whole = iv.lo == 0 && iv.hi == 1;
    std::string id = whole ? parent.id
                           : fresh_id(edge_ids, parent.id + "[" + format_rational(iv.lo) + "," +
                                                    format_rational(iv.hi) + "]");
    edges.push_back(Edge{std::move(id), a, b});
    images.push_back(EdgeImage{iv.edge, iv.lo, iv.hi});
  }
  return InducedCake{CakeGraph(std::move(ids), std::move(edges)), CoordinateMap(std::move(images))};
}

}  // namespace graphcake
