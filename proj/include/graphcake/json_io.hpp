#pragma once

#include <nlohmann/json.hpp>

#include "graphcake/allocation.hpp"
#include "graphcake/protocols.hpp"
#include "graphcake/topology.hpp"
#include "graphcake/valuation.hpp"

namespace graphcake {

using Json = nlohmann::ordered_json;

// Graph: {"vertices": ["a", ...], "edges": [["e0", "a", "b"], ...]}
Json graph_to_json(const CakeGraph& g);
CakeGraph graph_from_json(const Json& j);

// Valuation: {"<edge id>": [["lo", "density"], ...], ...}; omitted edges have zero density.
Json valuation_to_json(const CakeGraph& g, const Valuation& v);
Valuation valuation_from_json(const CakeGraph& g, const Json& j);

// Instance: {"graph": ..., "mode": "cake"|"chore", "agents": [valuation, ...]}
Json instance_to_json(const Instance& inst);
/// Parses and validates. Throws Error(ParseError/InvalidGraph/InvalidInstance).
Instance instance_from_json(const Json& j);

// Allocation: [[["edge id", "lo", "hi"], ...], ...] one list per agent.
Json allocation_to_json(const CakeGraph& g, const Allocation& a);
Allocation allocation_from_json(const CakeGraph& g, const Json& j);

Json report_to_json(const VerificationReport& r);
Json query_log_to_json(const QueryLog& q);
Json witness_to_json(const CakeGraph& g, const AlmostBridgelessWitness& w);
Json labeling_to_json(const CakeGraph& g, const OrientedLabeling& lab);

}  // namespace graphcake
