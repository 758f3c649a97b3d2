#include "graphcake/topology.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "graphcake/errors.hpp"
#include "union_find.hpp"

namespace graphcake {

std::vector<EdgeIndex> find_bridges(const CakeGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0);
  std::vector<bool> is_bridge(g.edge_count(), false);
  std::size_t timer = 0;

  struct Frame {
    VertexIndex v;
    EdgeIndex via;  // edge used to enter v, or edge_count() for the root
    std::size_t next = 0;
  };
  for (VertexIndex root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    std::vector<Frame> stack{{root, g.edge_count()}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const Incidence step = inc[f.next++];
        if (step.edge == f.via) continue;
        if (disc[step.other] == kUnseen) {
          disc[step.other] = low[step.other] = timer++;
          stack.push_back({step.other, step.edge});
        } else {
          low[f.v] = std::min(low[f.v], disc[step.other]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        VertexIndex parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] > disc[parent]) is_bridge[done.via] = true;
      }
    }
  }
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (is_bridge[e]) out.push_back(e);
  }
  return out;
}

std::vector<std::size_t> two_edge_connected_components(const CakeGraph& g) {
  std::vector<bool> bridge(g.edge_count(), false);
  for (EdgeIndex e : find_bridges(g)) bridge[e] = true;
  detail::UnionFind uf(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!bridge[e]) uf.unite(g.edge(e).u, g.edge(e).v);
  }
  std::vector<std::size_t> comp(g.vertex_count());
  std::vector<std::size_t> root_to_id(g.vertex_count(), std::numeric_limits<std::size_t>::max());
  std::size_t next = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    std::size_t r = uf.find(v);
    if (root_to_id[r] == std::numeric_limits<std::size_t>::max()) root_to_id[r] = next++;
    comp[v] = root_to_id[r];
  }
  return comp;
}

AlmostBridgelessWitness classify_almost_bridgeless(const CakeGraph& g) {
  const auto bridges = find_bridges(g);
  if (bridges.empty()) return AlmostBridgeless{g.edge(0).u, g.edge(0).v};

  const auto comp = two_edge_connected_components(g);
  const std::size_t nodes = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<EdgeIndex>> tree_adj(nodes);
  for (EdgeIndex b : bridges) {
    tree_adj[comp[g.edge(b).u]].push_back(b);
    tree_adj[comp[g.edge(b).v]].push_back(b);
  }
  for (const auto& adj : tree_adj) {
    if (adj.size() >= 3) return BridgeTriple{{adj[0], adj[1], adj[2]}};
  }
  // The bridge tree is a path; report, for each end component, the endpoint of its bridge.
  std::vector<VertexIndex> ends;
  for (std::size_t c = 0; c < nodes; ++c) {
    if (tree_adj[c].size() != 1) continue;
    const Edge& b = g.edge(tree_adj[c][0]);
    ends.push_back(comp[b.u] == c ? b.u : b.v);
  }
  return AlmostBridgeless{ends.at(0), ends.at(1)};
}

namespace {

bool edges_connected(const CakeGraph& g, const std::vector<EdgeIndex>& order, std::size_t from,
                     std::size_t to) {
  if (from >= to) return true;
  detail::UnionFind uf(g.vertex_count());
  for (std::size_t i = from; i < to; ++i) uf.unite(g.edge(order[i]).u, g.edge(order[i]).v);
  const std::size_t root = uf.find(g.edge(order[from]).u);
  for (std::size_t i = from; i < to; ++i) {
    if (uf.find(g.edge(order[i]).u) != root) return false;
  }
  return true;
}

bool vertex_on(const CakeGraph& g, const std::vector<EdgeIndex>& order, std::size_t from, std::size_t to,
               VertexIndex x) {
  for (std::size_t i = from; i < to; ++i) {
    if (g.touches(order[i], x)) return true;
  }
  return false;
}

}  // namespace

bool is_contiguous(const CakeGraph& g, const OrientedLabeling& lab) {
  const std::size_t m = g.edge_count();
  if (lab.order.size() != m || lab.tail.size() != m) return false;
  std::vector<bool> seen(m, false);
  for (EdgeIndex e : lab.order) {
    if (e >= m || seen[e]) return false;
    seen[e] = true;
  }
  for (EdgeIndex e = 0; e < m; ++e) {
    if (!g.touches(e, lab.tail[e])) return false;
  }
  for (std::size_t i = 1; i < m; ++i) {
    // Label i+1 (index i) against labels 1..i, and label i (index i-1) against labels i+1..m.
    if (!edges_connected(g, lab.order, 0, i)) return false;
    if (!vertex_on(g, lab.order, 0, i, lab.tail[lab.order[i]])) return false;
    if (!edges_connected(g, lab.order, i, m)) return false;
    if (!vertex_on(g, lab.order, i, m, lab.head(g, lab.order[i - 1]))) return false;
  }
  return true;
}

OrientedLabeling compute_contiguous_labeling(const CakeGraph& g) {
  const auto witness = classify_almost_bridgeless(g);
  if (!is_almost_bridgeless(witness)) {
    throw Error(ErrorKind::kNotAlmostBridgeless, "graph has three bridges no path traverses");
  }
  const auto [u, v] = std::get<AlmostBridgeless>(witness);
  const std::size_t m = g.edge_count();
  OrientedLabeling lab;
  lab.tail.assign(m, 0);
  std::vector<bool> used(m, false);
  std::vector<bool> in_ear(g.vertex_count(), false);

  // First ear: a shortest u-v path, ties broken by edge index through the sorted incidences.
  {
    std::vector<std::optional<Incidence>> parent(g.vertex_count());
    std::vector<bool> reached(g.vertex_count(), false);
    std::deque<VertexIndex> queue{u};
    reached[u] = true;
    while (!queue.empty()) {
      VertexIndex x = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.incident(x)) {
        if (reached[inc.other]) continue;
        reached[inc.other] = true;
        parent[inc.other] = Incidence{inc.edge, x};
        queue.push_back(inc.other);
      }
    }
    std::vector<EdgeIndex> path;
    for (VertexIndex x = v; x != u; x = parent[x]->other) {
      path.push_back(parent[x]->edge);
      lab.tail[parent[x]->edge] = parent[x]->other;
    }
    std::reverse(path.begin(), path.end());
    lab.order = path;
    in_ear[u] = true;
    for (EdgeIndex e : path) {
      used[e] = true;
      in_ear[g.edge(e).u] = in_ear[g.edge(e).v] = true;
    }
  }

  auto first_into = [&](VertexIndex x) {
    for (std::size_t i = 0; i < lab.order.size(); ++i) {
      if (lab.head(g, lab.order[i]) == x) return i;
    }
    return std::numeric_limits<std::size_t>::max();
  };

  // `ear` runs from its first to its last vertex; may be reversed to satisfy the insertion rule.
  auto insert_ear = [&](std::vector<Incidence> ear, VertexIndex start) {
    VertexIndex end = ear.back().other;
    bool reverse = false;
    if (start != u) {
      if (end == u) {
        reverse = true;
      } else if (first_into(end) < first_into(start)) {
        reverse = true;
      }
    }
    std::vector<EdgeIndex> edges;
    if (!reverse) {
      VertexIndex at = start;
      for (const Incidence& step : ear) {
        lab.tail[step.edge] = at;
        at = step.other;
        edges.push_back(step.edge);
      }
    } else {
      for (std::size_t i = ear.size(); i-- > 0;) {
        lab.tail[ear[i].edge] = ear[i].other;
        edges.push_back(ear[i].edge);
      }
      std::swap(start, end);
    }
    std::size_t pos = start == u ? 0 : first_into(start) + 1;
    lab.order.insert(lab.order.begin() + static_cast<std::ptrdiff_t>(pos), edges.begin(), edges.end());
    for (EdgeIndex e : edges) {
      used[e] = true;
      in_ear[g.edge(e).u] = in_ear[g.edge(e).v] = true;
    }
  };

  while (lab.order.size() < m) {
    bool progressed = true;
    while (progressed) {
      progressed = false;
      for (EdgeIndex e = 0; e < m; ++e) {
        if (used[e] || !in_ear[g.edge(e).u] || !in_ear[g.edge(e).v]) continue;
        insert_ear({Incidence{e, g.edge(e).v}}, g.edge(e).u);
        progressed = true;
      }
    }
    if (lab.order.size() == m) break;

    EdgeIndex start_edge = m;
    VertexIndex x = 0, y = 0;
    for (EdgeIndex e = 0; e < m && start_edge == m; ++e) {
      if (used[e]) continue;
      if (in_ear[g.edge(e).u] != in_ear[g.edge(e).v]) {
        start_edge = e;
        x = in_ear[g.edge(e).u] ? g.edge(e).u : g.edge(e).v;
        y = g.other_end(e, x);
      }
    }
    // Walk from y through fresh vertices until an ear vertex is reached again.
    std::vector<std::optional<Incidence>> parent(g.vertex_count());
    std::vector<bool> reached(g.vertex_count(), false);
    std::deque<VertexIndex> queue{y};
    reached[y] = true;
    std::optional<Incidence> closing;
    VertexIndex closing_from = y;
    while (!queue.empty() && !closing) {
      VertexIndex a = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.incident(a)) {
        if (inc.edge == start_edge || used[inc.edge]) continue;
        if (in_ear[inc.other]) {
          closing = inc;
          closing_from = a;
          break;
        }
        if (reached[inc.other]) continue;
        reached[inc.other] = true;
        parent[inc.other] = Incidence{inc.edge, a};
        queue.push_back(inc.other);
      }
    }
    if (!closing) throw std::logic_error("ear construction failed on an almost bridgeless graph");
    std::vector<Incidence> tail_part;
    for (VertexIndex a = closing_from; a != y; a = parent[a]->other) tail_part.push_back(Incidence{parent[a]->edge, a});
    std::reverse(tail_part.begin(), tail_part.end());
    std::vector<Incidence> ear{Incidence{start_edge, y}};
    ear.insert(ear.end(), tail_part.begin(), tail_part.end());
    ear.push_back(*closing);
    insert_ear(std::move(ear), x);
  }
  return lab;
}

bool is_bipolar_numbering(const CakeGraph& g, const std::vector<std::size_t>& label) {
  const std::size_t k = g.vertex_count();
  if (label.size() != k) return false;
  std::vector<bool> seen(k + 1, false);
  for (std::size_t l : label) {
    if (l < 1 || l > k || seen[l]) return false;
    seen[l] = true;
  }
  for (VertexIndex x = 0; x < k; ++x) {
    bool lower = false, higher = false;
    for (const Incidence& inc : g.incident(x)) {
      lower = lower || label[inc.other] < label[x];
      higher = higher || label[inc.other] > label[x];
    }
    if ((label[x] > 1 && !lower) || (label[x] < k && !higher)) return false;
  }
  return true;
}

BipolarSearch find_bipolar_numbering(const CakeGraph& g, BipolarSearchLimits limits) {
  const std::size_t k = g.vertex_count();
  if (k > limits.max_vertices) {
    throw Error(ErrorKind::kBudgetExceeded,
                std::to_string(k) + " vertices exceed the bipolar search limit of " +
                    std::to_string(limits.max_vertices));
  }
  BipolarSearch result;
  std::vector<std::size_t> label(k, 0);  // 0 = unplaced
  std::size_t placed = 0;
  bool aborted = false;

  // A placed vertex other than the last must keep a possible higher neighbour.
  auto still_feasible = [&]() {
    for (VertexIndex w = 0; w < k; ++w) {
      if (label[w] == 0 || label[w] == k) continue;
      bool ok = false;
      for (const Incidence& inc : g.incident(w)) {
        if (label[inc.other] == 0 || label[inc.other] > label[w]) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };

  auto search = [&](auto&& self) -> bool {
    if (++result.nodes_visited > limits.max_nodes) {
      aborted = true;
      return false;
    }
    if (placed == k) return true;
    for (VertexIndex x = 0; x < k; ++x) {
      if (label[x] != 0) continue;
      if (placed > 0) {
        bool has_lower = false;
        for (const Incidence& inc : g.incident(x)) has_lower = has_lower || label[inc.other] != 0;
        if (!has_lower) continue;
      }
      label[x] = ++placed;
      if (still_feasible() && self(self)) return true;
      label[x] = 0;
      --placed;
      if (aborted) return false;
    }
    return false;
  };

  if (search(search)) {
    result.numbering = label;
    result.complete = true;
  } else {
    result.complete = !aborted;
  }
  return result;
}

std::string to_dot(const CakeGraph& g) {
  std::vector<bool> bridge(g.edge_count(), false);
  for (EdgeIndex e : find_bridges(g)) bridge[e] = true;
  std::ostringstream out;
  out << "graph cake {\n";
  for (const std::string& id : g.vertex_ids()) out << "  \"" << id << "\";\n";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out << "  \"" << g.vertex_id(edge.u) << "\" -- \"" << g.vertex_id(edge.v) << "\" [label=\"" << edge.id
        << "\"";
    if (bridge[e]) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace graphcake
