#include "graphcake/fixtures.hpp"

#include <set>

#include "graphcake/errors.hpp"
#include "graphcake/protocols.hpp"

namespace graphcake {

namespace {

struct Builder {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Rational> values;

  VertexIndex vertex(std::string id) {
    vertices.push_back(std::move(id));
    return vertices.size() - 1;
  }
  void edge(VertexIndex u, VertexIndex v, Rational value) {
    edges.push_back(Edge{"e" + std::to_string(edges.size() + 1), u, v});
    values.push_back(std::move(value));
  }
  Instance identical(int agents, Mode mode = Mode::kCake) const {
    CakeGraph g(vertices, edges);
    return Instance{std::move(g), std::vector<Valuation>(agents, Valuation::per_edge_uniform(values)), mode};
  }
};

Builder star_builder(const std::vector<Rational>& values) {
  Builder b;
  const VertexIndex c = b.vertex("c");
  for (std::size_t i = 0; i < values.size(); ++i) b.edge(c, b.vertex("x" + std::to_string(i + 1)), values[i]);
  return b;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kBadParameters, what);
}

}  // namespace

Instance star_tight(int n) {
  require(n >= 1 && n <= 20, "star_tight needs 1 <= n <= 20");
  const Rational each(1, 2 * n - 1);
  return star_builder(std::vector<Rational>(2 * n - 1, each)).identical(n);
}

Instance star_fnk_tight(int n, int k) {
  require(n >= 2 && n <= 20 && k >= 3 && k <= 40, "star_fnk_tight needs 2 <= n <= 20 and 3 <= k <= 40");
  const Rational f = f_guarantee(n, k);
  std::vector<Rational> values;
  if (k >= 2 * n - 1) {
    values.assign(2 * n - 1, f);
    values.resize(k, Rational(0));
  } else {
    values.assign(k - 1, f);
    values.push_back(1 - (k - 1) * f);
  }
  return star_builder(values).identical(n);
}

Instance three_bridge(const std::string& shape) {
  const Rational third(1, 3);
  if (shape == "star") return star_builder({third, third, third}).identical(2);
  Builder b;
  if (shape == "spider") {
    // Legs of length two; only the outer edges carry value.
    const VertexIndex c = b.vertex("c");
    for (int leg = 1; leg <= 3; ++leg) {
      const VertexIndex mid = b.vertex("m" + std::to_string(leg));
      b.edge(c, mid, 0);
      b.edge(mid, b.vertex("x" + std::to_string(leg)), third);
    }
    return b.identical(2);
  }
  if (shape == "triangle") {
    // Pendant edges hanging off a worthless triangle.
    const VertexIndex a = b.vertex("a"), bb = b.vertex("b"), c = b.vertex("c");
    b.edge(a, bb, 0);
    b.edge(bb, c, 0);
    b.edge(c, a, 0);
    b.edge(a, b.vertex("x1"), third);
    b.edge(bb, b.vertex("x2"), third);
    b.edge(c, b.vertex("x3"), third);
    return b.identical(2);
  }
  throw Error(ErrorKind::kBadParameters, "three_bridge shape must be star, spider or triangle");
}

Instance frontier_edge(const Rational& alpha) {
  require(alpha > Rational(1, 2) && alpha <= 1, "frontier_edge needs 1/2 < alpha <= 1");
  CakeGraph g({"a", "b"}, {Edge{"e1", 0, 1}});
  const Rational lo = 1 - alpha;
  std::vector<DensitySegment> segs;
  if (lo > 0) segs.push_back({Rational(0), Rational(0)});
  segs.push_back({lo, 1 / (alpha - lo)});
  if (alpha < 1) segs.push_back({alpha, Rational(0)});
  Valuation second(std::vector<EdgeDensity>{EdgeDensity(segs)});
  return Instance{std::move(g), {Valuation::per_edge_uniform({Rational(1)}), second}, Mode::kCake};
}

Instance four_edge_star() {
  const Rational q(1, 4);
  return star_builder({q, q, q, q}).identical(2);
}

Instance fig2(const Rational& alpha, const Rational& eps) {
  require(alpha > 0 && alpha <= Rational(1, 4), "fig2 needs 0 < alpha <= 1/4");
  require(eps > 0 && eps < alpha, "fig2 needs 0 < eps < alpha");
  Builder b;
  const VertexIndex left = b.vertex("l"), right = b.vertex("r");
  const Rational side = alpha - eps;
  b.edge(b.vertex("l1"), left, side);
  b.edge(b.vertex("l2"), left, side);
  b.edge(left, right, 1 - 4 * alpha + 4 * eps);
  b.edge(right, b.vertex("r1"), side);
  b.edge(right, b.vertex("r2"), side);
  return b.identical(2);
}

Instance fig1_flowers(const std::string& side) {
  Builder b;
  const VertexIndex a = b.vertex("a"), bb = b.vertex("b"), c = b.vertex("c");
  const VertexIndex corners[3] = {a, bb, c};
  if (side == "left") {
    const Rational each(1, 9);
    b.edge(a, bb, each);
    b.edge(bb, c, each);
    b.edge(c, a, each);
    for (int i = 0; i < 3; ++i) {
      const VertexIndex petal = b.vertex("p" + std::to_string(i + 1));
      b.edge(corners[i], petal, each);
      b.edge(corners[i], petal, each);
    }
    return b.identical(2);
  }
  if (side == "right") {
    const Rational each(1, 12);
    b.edge(a, bb, each);
    b.edge(bb, c, each);
    b.edge(c, a, each);
    for (int i = 0; i < 3; ++i) {
      const VertexIndex p = b.vertex("p" + std::to_string(i + 1)), r = b.vertex("r" + std::to_string(i + 1));
      b.edge(corners[i], p, each);
      b.edge(p, r, each);
      b.edge(r, corners[i], each);
    }
    return b.identical(2);
  }
  throw Error(ErrorKind::kBadParameters, "fig1_flowers side must be left or right");
}

Instance ternary_tree(int k) {
  require(k >= 1 && k <= 4, "ternary_tree needs 1 <= k <= 4");
  Builder b;
  const VertexIndex root = b.vertex("r");
  std::vector<VertexIndex> layer{b.vertex("t")};
  b.edge(root, layer[0], 0);
  int leaves = 1;
  for (int i = 0; i < k; ++i) leaves *= 3;
  for (int depth = 1; depth <= k; ++depth) {
    std::vector<VertexIndex> next;
    for (VertexIndex parent : layer) {
      for (int c = 0; c < 3; ++c) {
        const VertexIndex child = b.vertex(b.vertices[parent] + std::to_string(c));
        b.edge(parent, child, depth == k ? Rational(1, leaves) : Rational(0));
        next.push_back(child);
      }
    }
    layer = std::move(next);
  }
  return b.identical(2);
}

Instance equit_star3() {
  const Rational third(1, 3);
  return star_builder({third, third, third}).identical(2);
}

Instance chore_star(int n) {
  require(n >= 1 && n <= 20, "chore_star needs 1 <= n <= 20");
  return star_builder(std::vector<Rational>(n + 1, Rational(1, n + 1))).identical(n, Mode::kChore);
}

const std::vector<FixtureInfo>& fixture_catalog() {
  static const std::vector<FixtureInfo> catalog{
      {"star_tight", "n", "star with 2n-1 equal edges; no connected allocation beats 1/(2n-1)"},
      {"star_fnk_tight", "n k", "k-edge star on which no connected allocation beats f(n,k)"},
      {"three_bridge", "shape=star|spider|triangle", "value on three bridges no path covers; welfare at most 1/3"},
      {"frontier_edge", "alpha", "single edge; agent 2 only values [1-alpha, alpha]"},
      {"four_edge_star", "", "four equal edges; no connected allocation gives (>1/2, >1/4)"},
      {"fig2", "alpha=1/4 eps=1/100", "double-forked path limiting the flexible frontier"},
      {"fig1_flowers", "side=left|right", "almost bridgeless graphs without a bipolar numbering"},
      {"ternary_tree", "k", "rooted ternary tree with 3^k valued leaves"},
      {"equit_star3", "", "three equal edges; inequity at least 1/3"},
      {"chore_star", "n", "n+1 equal chore edges; egalitarian cost at least 2/(n+1)"},
  };
  return catalog;
}

namespace {

class Params {
 public:
  explicit Params(const FixtureSpec& spec) : spec_(spec) {}

  int integer(const std::string& key, std::optional<int> fallback = std::nullopt) {
    const Rational r = rational(key, fallback ? std::optional<Rational>(Rational(*fallback)) : std::nullopt);
    if (r.get_den() != 1 || !r.get_num().fits_sint_p()) {
      throw Error(ErrorKind::kBadParameters, "parameter '" + key + "' must be an integer");
    }
    return static_cast<int>(r.get_num().get_si());
  }

  Rational rational(const std::string& key, std::optional<Rational> fallback = std::nullopt) {
    used_.insert(key);
    auto it = spec_.parameters.find(key);
    if (it == spec_.parameters.end()) {
      if (fallback) return *fallback;
      throw Error(ErrorKind::kBadParameters, "fixture " + spec_.name + " needs parameter '" + key + "'");
    }
    try {
      return parse_rational(it->second);
    } catch (const Error&) {
      throw Error(ErrorKind::kBadParameters, "parameter '" + key + "' is not a rational: " + it->second);
    }
  }

  std::string text(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    auto it = spec_.parameters.find(key);
    return it == spec_.parameters.end() ? fallback : it->second;
  }

  void finish() const {
    for (const auto& [key, value] : spec_.parameters) {
      if (!used_.count(key)) throw Error(ErrorKind::kBadParameters, "fixture " + spec_.name + " has no parameter '" + key + "'");
    }
  }

 private:
  const FixtureSpec& spec_;
  std::set<std::string> used_;
};

}  // namespace

Instance build_fixture(const FixtureSpec& spec) {
  Params p(spec);
  const auto build = [&]() -> Instance {
    const std::string& name = spec.name;
    if (name == "star_tight") {
      return star_tight(p.integer("n"));
    } else if (name == "star_fnk_tight") {
      const int n = p.integer("n");
      return star_fnk_tight(n, p.integer("k"));
    } else if (name == "three_bridge") {
      return three_bridge(p.text("shape", "star"));
    } else if (name == "frontier_edge") {
      return frontier_edge(p.rational("alpha"));
    } else if (name == "four_edge_star") {
      return four_edge_star();
    } else if (name == "fig2") {
      const Rational alpha = p.rational("alpha", Rational(1, 4));
      return fig2(alpha, p.rational("eps", Rational(1, 100)));
    } else if (name == "fig1_flowers") {
      return fig1_flowers(p.text("side", "left"));
    } else if (name == "ternary_tree") {
      return ternary_tree(p.integer("k"));
    } else if (name == "equit_star3") {
      return equit_star3();
    } else if (name == "chore_star") {
      return chore_star(p.integer("n"));
    }
    throw Error(ErrorKind::kUnknownFixture, "unknown fixture '" + name + "'");
  };
  Instance inst = build();
  p.finish();
  validate_instance(inst);
  return inst;
}

}  // namespace graphcake
