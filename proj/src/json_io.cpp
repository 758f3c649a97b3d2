#include "graphcake/json_io.hpp"

#include "graphcake/errors.hpp"

namespace graphcake {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::kParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Rational rational(const Json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  malformed(std::string(what) + " must be a \"p/q\" string");
}

EdgeIndex edge_by_id(const CakeGraph& g, const std::string& id) {
  auto e = g.find_edge(id);
  if (!e) throw Error(ErrorKind::kUnknownEdge, "unknown edge '" + id + "'");
  return *e;
}

}  // namespace

Json graph_to_json(const CakeGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.id, g.vertex_id(e.u), g.vertex_id(e.v)});
  return Json{{"vertices", g.vertex_ids()}, {"edges", std::move(edges)}};
}

CakeGraph graph_from_json(const Json& j) {
  const Json& vs = field(j, "vertices");
  const Json& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array()) malformed("graph vertices and edges must be arrays");
  std::vector<std::string> vertices;
  for (const Json& v : vs) vertices.push_back(text(v, "vertex id"));
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (const Json& e : es) {
    if (!e.is_array() || e.size() != 3) malformed("edges must be [id, u, v] triples");
    edges.emplace_back(text(e[0], "edge id"), text(e[1], "endpoint"), text(e[2], "endpoint"));
  }
  return CakeGraph(std::move(vertices), edges);
}

Json valuation_to_json(const CakeGraph& g, const Valuation& v) {
  Json out = Json::object();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    Json segs = Json::array();
    for (const DensitySegment& s : v.edge(e).segments()) {
      segs.push_back({format_rational(s.start), format_rational(s.density)});
    }
    out[g.edge(e).id] = std::move(segs);
  }
  return out;
}

Valuation valuation_from_json(const CakeGraph& g, const Json& j) {
  if (!j.is_object()) malformed("valuation must be an object keyed by edge id");
  std::vector<EdgeDensity> per_edge(g.edge_count());
  for (const auto& [id, segs] : j.items()) {
    const EdgeIndex e = edge_by_id(g, id);
    if (!segs.is_array()) malformed("segments of edge '" + id + "' must be an array");
    std::vector<DensitySegment> out;
    for (const Json& s : segs) {
      if (!s.is_array() || s.size() != 2) malformed("segments must be [start, density] pairs");
      out.push_back({rational(s[0], "segment start"), rational(s[1], "density")});
    }
    per_edge[e] = EdgeDensity(std::move(out));
  }
  return Valuation(std::move(per_edge));
}

Json instance_to_json(const Instance& inst) {
  Json agents = Json::array();
  for (const Valuation& v : inst.agents) agents.push_back(valuation_to_json(inst.graph, v));
  return Json{{"graph", graph_to_json(inst.graph)},
              {"mode", inst.mode == Mode::kCake ? "cake" : "chore"},
              {"agents", std::move(agents)}};
}

Instance instance_from_json(const Json& j) {
  CakeGraph g = graph_from_json(field(j, "graph"));
  Mode mode = Mode::kCake;
  if (j.contains("mode")) {
    const std::string m = text(j.at("mode"), "mode");
    if (m == "chore") {
      mode = Mode::kChore;
    } else if (m != "cake") {
      malformed("mode must be \"cake\" or \"chore\"");
    }
  }
  const Json& agents = field(j, "agents");
  if (!agents.is_array()) malformed("agents must be an array");
  std::vector<Valuation> vals;
  for (const Json& a : agents) vals.push_back(valuation_from_json(g, a));
  Instance inst{std::move(g), std::move(vals), mode};
  validate_instance(inst);
  return inst;
}

Json allocation_to_json(const CakeGraph& g, const Allocation& a) {
  Json out = Json::array();
  for (const Piece& p : a.pieces) {
    Json piece = Json::array();
    for (const Interval& iv : p.intervals()) {
      piece.push_back({g.edge(iv.edge).id, format_rational(iv.lo), format_rational(iv.hi)});
    }
    out.push_back(std::move(piece));
  }
  return out;
}

Allocation allocation_from_json(const CakeGraph& g, const Json& j) {
  if (!j.is_array()) malformed("allocation must be an array of pieces");
  Allocation a;
  for (const Json& piece : j) {
    if (!piece.is_array()) malformed("each piece must be an array of intervals");
    std::vector<Interval> intervals;
    for (const Json& iv : piece) {
      if (!iv.is_array() || iv.size() != 3) malformed("intervals must be [edge id, lo, hi]");
      intervals.push_back({edge_by_id(g, text(iv[0], "edge id")), rational(iv[1], "lo"), rational(iv[2], "hi")});
    }
    a.pieces.emplace_back(std::move(intervals));
  }
  return a;
}

Json report_to_json(const VerificationReport& r) {
  Json agents = Json::array();
  for (const AgentReport& a : r.agents) {
    agents.push_back({{"value", format_rational(a.value)}, {"connected", a.connected}, {"pieces", a.piece_count}});
  }
  return Json{{"mode", r.mode == Mode::kCake ? "cake" : "chore"},
              {"agents", std::move(agents)},
              {"disjoint", r.disjoint},
              {"complete", r.complete},
              {"connected", r.all_connected()},
              {r.mode == Mode::kCake ? "egalitarian_welfare" : "egalitarian_cost", format_rational(r.egalitarian)},
              {"inequity", format_rational(r.inequity)},
              {"total_pieces", r.total_pieces}};
}

Json query_log_to_json(const QueryLog& q) { return Json{{"evaluations", q.evaluations}, {"cuts", q.cuts}}; }

Json witness_to_json(const CakeGraph& g, const AlmostBridgelessWitness& w) {
  if (const auto* yes = std::get_if<AlmostBridgeless>(&w)) {
    return Json{{"almost_bridgeless", true}, {"add_edge", {g.vertex_id(yes->x), g.vertex_id(yes->y)}}};
  }
  const auto& no = std::get<BridgeTriple>(w);
  Json ids = Json::array();
  for (EdgeIndex e : no.bridges) ids.push_back(g.edge(e).id);
  return Json{{"almost_bridgeless", false}, {"bridges", std::move(ids)}};
}

Json labeling_to_json(const CakeGraph& g, const OrientedLabeling& lab) {
  Json out = Json::array();
  for (std::size_t i = 0; i < lab.order.size(); ++i) {
    const EdgeIndex e = lab.order[i];
    out.push_back({{"label", i + 1},
                   {"edge", g.edge(e).id},
                   {"tail", g.vertex_id(lab.tail[e])},
                   {"head", g.vertex_id(lab.head(g, e))}});
  }
  return out;
}

}  // namespace graphcake
