#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graphcake/graph.hpp"
#include "graphcake/valuation.hpp"

namespace graphcake::testing {

inline Rational q(const char* text) { return parse_rational(text); }

/// Vertices "v0".."v{n-1}", edges "e0".. in the given order.
inline CakeGraph make_graph(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::string> ids;
  for (std::size_t v = 0; v < vertices; ++v) ids.push_back("v" + std::to_string(v));
  std::vector<Edge> es;
  for (std::size_t i = 0; i < edges.size(); ++i) es.push_back({"e" + std::to_string(i), edges[i].first, edges[i].second});
  return CakeGraph(std::move(ids), std::move(es));
}

inline CakeGraph path_graph(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < m; ++i) es.emplace_back(i, i + 1);
  return make_graph(m + 1, es);
}

inline CakeGraph star_graph(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < k; ++i) es.emplace_back(0, i + 1);
  return make_graph(k + 1, es);
}

inline CakeGraph cycle_graph(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < m; ++i) es.emplace_back(i, (i + 1) % m);
  return make_graph(m, es);
}

/// Triangle with a doubled pendant edge at every corner.
inline CakeGraph flower_left() {
  return make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 3}, {1, 4}, {1, 4}, {2, 5}, {2, 5}});
}

/// Triangle with a pendant triangle at every corner.
inline CakeGraph flower_right() {
  return make_graph(9, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}, {1, 5}, {5, 6}, {6, 1}, {2, 7}, {7, 8}, {8, 2}});
}

inline Valuation uniform_valuation(const CakeGraph& g) {
  return Valuation::per_edge_uniform(std::vector<Rational>(g.edge_count(), Rational(1, g.edge_count())));
}

inline Instance identical_uniform(const CakeGraph& g, std::size_t n, Mode mode = Mode::kCake) {
  return Instance{g, std::vector<Valuation>(n, uniform_valuation(g)), mode};
}

/// Connected multigraph: random spanning tree plus `extra` random non-loop edges.
inline CakeGraph random_connected(std::mt19937_64& rng, std::size_t vertices, std::size_t extra) {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t v = 1; v < vertices; ++v) es.emplace_back(rng() % v, v);
  for (std::size_t i = 0; i < extra; ++i) {
    std::size_t a = rng() % vertices, b = rng() % vertices;
    if (a == b) b = (a + 1) % vertices;
    es.emplace_back(a, b);
  }
  std::shuffle(es.begin(), es.end(), rng);
  for (auto& e : es) {
    if (rng() % 2) std::swap(e.first, e.second);
  }
  return make_graph(vertices, es);
}

/// A u-v path followed by random ears; adding the edge uv makes it bridgeless.
inline CakeGraph random_ear_graph(std::mt19937_64& rng, std::size_t path_len, std::size_t ears) {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  std::size_t vertices = path_len + 1;
  for (std::size_t i = 0; i < path_len; ++i) es.emplace_back(i, i + 1);
  for (std::size_t k = 0; k < ears; ++k) {
    std::size_t a = rng() % vertices, b = rng() % vertices;
    std::size_t inner = rng() % 3;
    if (inner == 0 && a == b) inner = 1;
    std::size_t prev = a;
    for (std::size_t j = 0; j < inner; ++j) {
      es.emplace_back(prev, vertices);
      prev = vertices++;
    }
    es.emplace_back(prev, b);
  }
  std::shuffle(es.begin(), es.end(), rng);
  return make_graph(vertices, es);
}

/// Random piecewise-constant valuation normalized to 1 (every edge gets positive value).
inline Valuation random_valuation(std::mt19937_64& rng, std::size_t edges, std::size_t max_segments = 3) {
  std::vector<std::vector<DensitySegment>> raw(edges);
  Rational total = 0;
  for (auto& segs : raw) {
    std::size_t count = 1 + rng() % max_segments;
    std::vector<Rational> starts{0};
    for (std::size_t s = 1; s < count; ++s) starts.push_back(make_rational(static_cast<long>(s * 8 + rng() % 8), static_cast<long>(count * 8)));
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    for (const Rational& st : starts) segs.push_back({st, Rational(static_cast<long>(rng() % 5))});
    segs.back().density += 1;
  }
  std::vector<EdgeDensity> per_edge;
  for (auto& segs : raw) per_edge.emplace_back(segs);
  Valuation v(std::move(per_edge));
  return v.scaled(1 / v.total());
}

}  // namespace graphcake::testing
