#include <algorithm>
#include <random>

#include "graphcake/errors.hpp"
#include "graphcake/fixtures.hpp"

namespace graphcake {

GraphFamily parse_family(const std::string& name) {
  if (name == "tree") return GraphFamily::kTree;
  if (name == "star") return GraphFamily::kStar;
  if (name == "cycle-augmented") return GraphFamily::kCycleAugmented;
  if (name == "arbitrary") return GraphFamily::kArbitrary;
  if (name == "height-two") return GraphFamily::kHeightTwo;
  throw Error(ErrorKind::kBadParameters,
              "unknown graph family '" + name + "' (tree, star, cycle-augmented, arbitrary, height-two)");
}

std::string family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::kTree: return "tree";
    case GraphFamily::kStar: return "star";
    case GraphFamily::kCycleAugmented: return "cycle-augmented";
    case GraphFamily::kArbitrary: return "arbitrary";
    case GraphFamily::kHeightTwo: return "height-two";
  }
  return "arbitrary";
}

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

// Modulo draws keep the stream portable across standard libraries.
std::size_t below(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

Pairs random_tree(std::mt19937_64& rng, std::size_t edges) {
  Pairs es;
  for (std::size_t v = 1; v <= edges; ++v) es.emplace_back(below(rng, v), v);
  return es;
}

Pairs random_height_two(std::mt19937_64& rng, std::size_t edges) {
  const std::size_t children = 1 + below(rng, edges);
  Pairs es;
  for (std::size_t c = 1; c <= children; ++c) es.emplace_back(0, c);
  std::size_t next = children + 1;
  while (es.size() < edges) es.emplace_back(1 + below(rng, children), next++);
  return es;
}

// A path closed up by ears: joining the path's ends would leave no bridge.
Pairs random_ears(std::mt19937_64& rng, std::size_t edges, std::size_t& vertices) {
  const std::size_t path = 1 + below(rng, edges);
  Pairs es;
  for (std::size_t i = 0; i < path; ++i) es.emplace_back(i, i + 1);
  vertices = path + 1;
  while (es.size() < edges) {
    const std::size_t length = 1 + below(rng, edges - es.size());
    std::size_t a = below(rng, vertices), b = below(rng, vertices);
    if (length == 1 && a == b) b = (a + 1) % vertices;
    std::size_t prev = a;
    for (std::size_t j = 1; j < length; ++j) {
      es.emplace_back(prev, vertices);
      prev = vertices++;
    }
    es.emplace_back(prev, b);
  }
  return es;
}

Valuation random_valuation(std::mt19937_64& rng, std::size_t edges, std::size_t max_segments) {
  std::vector<std::vector<DensitySegment>> raw(edges);
  for (auto& segs : raw) {
    const std::size_t count = 1 + below(rng, max_segments);
    std::vector<Rational> starts{Rational(0)};
    for (std::size_t s = 1; s < count; ++s) {
      starts.push_back(make_rational(static_cast<long>(s * 4 + below(rng, 4)), static_cast<long>(count * 4)));
    }
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    for (const Rational& st : starts) segs.push_back({st, Rational(static_cast<long>(below(rng, 5)))});
  }
  raw[below(rng, edges)].back().density += 1;
  std::vector<EdgeDensity> per_edge;
  for (auto& segs : raw) per_edge.emplace_back(segs);
  Valuation v(std::move(per_edge));
  return v.scaled(1 / v.total());
}

}  // namespace

Instance random_instance(std::uint64_t seed, const GeneratorParams& params) {
  if (params.agents < 1 || params.agents > 8) throw Error(ErrorKind::kBadParameters, "agents must be in 1..8");
  if (params.edges < 1 || params.edges > 12) throw Error(ErrorKind::kBadParameters, "edges must be in 1..12");
  if (params.max_segments < 1 || params.max_segments > 4) {
    throw Error(ErrorKind::kBadParameters, "segments per edge must be in 1..4");
  }
  if (params.family == GraphFamily::kStar && params.edges < 3) {
    throw Error(ErrorKind::kBadParameters, "stars need at least 3 edges");
  }
  std::mt19937_64 rng(seed);
  const auto m = static_cast<std::size_t>(params.edges);
  std::size_t vertices = m + 1;
  Pairs es;
  switch (params.family) {
    case GraphFamily::kTree: es = random_tree(rng, m); break;
    case GraphFamily::kStar:
      for (std::size_t i = 1; i <= m; ++i) es.emplace_back(0, i);
      break;
    case GraphFamily::kHeightTwo: es = random_height_two(rng, m); break;
    case GraphFamily::kCycleAugmented: es = random_ears(rng, m, vertices); break;
    case GraphFamily::kArbitrary: {
      vertices = 2 + below(rng, m);
      es = random_tree(rng, vertices - 1);
      while (es.size() < m) {
        std::size_t a = below(rng, vertices), b = below(rng, vertices);
        if (a == b) b = (a + 1) % vertices;
        es.emplace_back(a, b);
      }
      break;
    }
  }
  // Stars and height-two trees keep vertex 0 as the centre / root.
  if (params.family != GraphFamily::kStar && params.family != GraphFamily::kHeightTwo) {
    std::shuffle(es.begin(), es.end(), rng);
  }
  for (auto& e : es) {
    if (below(rng, 2)) std::swap(e.first, e.second);
  }
  std::vector<std::string> ids;
  for (std::size_t v = 0; v < vertices; ++v) ids.push_back("v" + std::to_string(v));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < es.size(); ++i) edges.push_back(Edge{"e" + std::to_string(i), es[i].first, es[i].second});
  CakeGraph g(std::move(ids), std::move(edges));

  std::vector<Valuation> agents;
  for (int i = 0; i < params.agents; ++i) {
    agents.push_back(random_valuation(rng, m, static_cast<std::size_t>(params.max_segments)));
  }
  Instance inst{std::move(g), std::move(agents), params.mode};
  validate_instance(inst);
  return inst;
}

}  // namespace graphcake
