#include "graphcake/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "graphcake/errors.hpp"
#include "graphcake/fixtures.hpp"
#include "graphcake/json_io.hpp"
#include "graphcake/oracle.hpp"
#include "graphcake/protocols.hpp"
#include "graphcake/topology.hpp"

namespace graphcake {

namespace {

constexpr int kGuaranteeViolated = 2;

Json read_json(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") return Json::parse(in);
    std::ifstream file(path);
    if (!file) throw Error(ErrorKind::kParseError, "cannot open '" + path + "'");
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
}

// Accepts a bare graph document or anything carrying a "graph" field.
CakeGraph read_graph(const Json& j) { return graph_from_json(j.contains("graph") ? j.at("graph") : j); }

// Accepts an instance document or a solve result carrying one under "instance".
Instance read_instance(const Json& j) { return instance_from_json(j.contains("instance") ? j.at("instance") : j); }

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string with_decimal(const Rational& r, bool human) {
  return human ? format_rational(r) + " (approx " + approximate(r) + ")" : format_rational(r);
}

Json guarantee_to_json(const Guarantee& g) {
  Json per_agent = Json::array();
  for (const Rational& r : g.per_agent) per_agent.push_back(format_rational(r));
  Json out{{"per_agent", std::move(per_agent)}, {"connected", g.connected}, {"complete", g.complete}};
  if (g.max_pieces_per_agent) out["max_pieces_per_agent"] = *g.max_pieces_per_agent;
  if (g.max_total_pieces) out["max_total_pieces"] = *g.max_total_pieces;
  if (g.max_inequity) out["max_inequity"] = format_rational(*g.max_inequity);
  return out;
}

Guarantee guarantee_from_json(const Json& j) {
  Guarantee g;
  try {
    for (const Json& r : j.at("per_agent")) g.per_agent.push_back(parse_rational(r.get<std::string>()));
    g.connected = j.at("connected").get<bool>();
    g.complete = j.at("complete").get<bool>();
    if (j.contains("max_pieces_per_agent")) g.max_pieces_per_agent = j.at("max_pieces_per_agent").get<std::size_t>();
    if (j.contains("max_total_pieces")) g.max_total_pieces = j.at("max_total_pieces").get<std::size_t>();
    if (j.contains("max_inequity")) g.max_inequity = parse_rational(j.at("max_inequity").get<std::string>());
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParseError, std::string("malformed guarantee: ") + e.what());
  }
  return g;
}

Objective parse_objective(const std::string& name) {
  if (name == "egal") return Objective::kMaxEgalitarianWelfare;
  if (name == "cost") return Objective::kMinEgalitarianCost;
  if (name == "inequity") return Objective::kMinInequity;
  if (name == "frontier") return Objective::kMaxFrontierPartner;
  throw Error(ErrorKind::kBadParameters, "objective must be egal, cost, inequity or frontier");
}

std::pair<int, int> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_lo = 0, used_hi = 0;
    const int lo = std::stoi(text.substr(0, colon), &used_lo);
    const int hi = std::stoi(text.substr(colon + 1), &used_hi);
    if (used_lo != colon || used_hi != text.size() - colon - 1) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::kBadParameters, "window must look like LO:HI, e.g. -3:1");
  }
}

// CLI11 reads "-3:1" as an option name, so glue such values to their option first.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool takes_value = args[i] == "--window" || args[i] == "-w";
    if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-') {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& raw_args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fair division of graphical cakes with exact rational arithmetic", "graphcake"};
  app.require_subcommand(1);

  std::string input;
  bool human = false;
  bool as_json = false;

  auto* classify = app.add_subcommand("classify", "Decide whether the graph is almost bridgeless");
  bool dot = false;
  classify->add_option("input", input, "Graph or instance JSON (default: stdin)");
  classify->add_flag("--dot", dot, "Print the graph in DOT format, bridges dashed");
  classify->add_flag("--json", as_json, "Machine-readable output");

  auto* label = app.add_subcommand("label", "Print a contiguous oriented labeling");
  label->add_option("input", input, "Graph or instance JSON (default: stdin)");

  auto* solve = app.add_subcommand("solve", "Run a protocol and self-verify the allocation");
  std::string protocol;
  std::string alpha_text, root;
  int k = 0;
  solve->add_option("input", input, "Instance JSON (default: stdin)");
  solve->add_option("--protocol", protocol, "Protocol name")->required();
  auto* alpha_opt = solve->add_option("--alpha", alpha_text, "flex2 entitlement, p/q");
  auto* k_opt = solve->add_option("--k", k, "multi2 refinement rounds");
  auto* root_opt = solve->add_option("--root", root, "height2 root vertex id");
  solve->add_flag("--human", human, "Readable summary with decimal approximations");

  auto* verify = app.add_subcommand("verify", "Re-check an allocation against its instance");
  std::string allocation_path;
  verify->add_option("input", input, "solve output, or an instance with --allocation (default: stdin)");
  verify->add_option("--allocation", allocation_path, "Allocation JSON file");

  auto* fixture = app.add_subcommand("fixture", "Worst-case instances");
  fixture->require_subcommand(1);
  auto* fixture_list = fixture->add_subcommand("list", "List the catalog");
  auto* fixture_build = fixture->add_subcommand("build", "Emit a fixture instance");
  std::string fixture_name;
  std::vector<std::string> fixture_params;
  fixture_build->add_option("name", fixture_name, "Fixture name")->required();
  fixture_build->add_option("-p,--param", fixture_params, "key=value");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive grid search for the best allocation");
  std::size_t grid = 0;
  std::string objective_name = "egal";
  std::size_t pieces = 0;
  bool complete = false, strict = false;
  std::string threshold_text = "0";
  std::uint64_t max_states = GridSearchConfig{}.max_states;
  oracle->add_option("input", input, "Instance JSON (default: stdin)");
  oracle->add_option("--instance", input, "Instance JSON");
  oracle->add_option("--grid", grid, "Cuts at multiples of 1/grid")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--objective", objective_name, "egal, cost, inequity or frontier");
  auto* pieces_opt = oracle->add_option("--pieces", pieces, "Total connected piece budget");
  oracle->add_flag("--complete", complete, "Only complete allocations (needed for inequity)");
  oracle->add_option("--threshold", threshold_text, "frontier: the partner's minimum value");
  oracle->add_flag("--strict", strict, "frontier: the partner must exceed the threshold");
  oracle->add_option("--max-states", max_states, "Search budget");
  oracle->add_flag("--json", as_json, "Machine-readable output");

  auto* lemma = app.add_subcommand("lemma", "Exhaustive lemma checks");
  lemma->require_subcommand(1);
  auto* powers3 = lemma->add_subcommand("powers3", "|sum of t terms +-{1,2}*3^a - 1/2| >= 1/(2*3^t)");
  int terms = 1;
  std::string window = "-3:1";
  powers3->add_option("-t", terms, "Number of terms")->required();
  powers3->add_option("-w,--window", window, "Exponent window LO:HI");
  powers3->add_flag("--json", as_json, "Machine-readable output");

  auto* gen = app.add_subcommand("gen", "Seeded random instance");
  std::uint64_t seed = 1;
  GeneratorParams params;
  std::string family = "arbitrary";
  bool chore = false;
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--family", family, "tree, star, cycle-augmented, arbitrary or height-two");
  gen->add_option("--agents", params.agents, "Number of agents (1..8)");
  gen->add_option("--edges", params.edges, "Number of edges (1..12)");
  gen->add_option("--segments", params.max_segments, "Density segments per edge (1..4)");
  gen->add_flag("--chore", chore, "Emit a chore instance");

  std::vector<std::string> args = glue_negative_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (classify->parsed()) {
      const CakeGraph g = read_graph(read_json(input, in));
      if (dot) {
        out << to_dot(g);
        return 0;
      }
      const AlmostBridgelessWitness w = classify_almost_bridgeless(g);
      if (as_json) {
        print(out, witness_to_json(g, w));
      } else if (const auto* yes = std::get_if<AlmostBridgeless>(&w)) {
        out << "almost-bridgeless: yes\n";
        out << "add edge: " << g.vertex_id(yes->x) << " -- " << g.vertex_id(yes->y) << "\n";
      } else {
        out << "almost-bridgeless: no\n";
        out << "bridges no path covers:";
        for (EdgeIndex e : std::get<BridgeTriple>(w).bridges) out << " " << g.edge(e).id;
        out << "\n";
      }
      return 0;
    }

    if (label->parsed()) {
      const CakeGraph g = read_graph(read_json(input, in));
      print(out, labeling_to_json(g, compute_contiguous_labeling(g)));
      return 0;
    }

    if (solve->parsed()) {
      const Instance inst = read_instance(read_json(input, in));
      ProtocolOptions options;
      if (*alpha_opt) options.alpha = parse_rational(alpha_text);
      if (*k_opt) options.k = k;
      if (*root_opt) options.root = root;
      const NamedRun run = run_protocol(protocol, inst, options);
      const VerificationReport report = verify_allocation(inst, run.result.allocation);
      const std::vector<std::string> problems = check_guarantee(run.guarantee, report);
      if (human) {
        out << "protocol " << run.protocol << "\n";
        for (std::size_t i = 0; i < report.agents.size(); ++i) {
          const AgentReport& a = report.agents[i];
          out << "agent " << i + 1 << (inst.mode == Mode::kCake ? ": value " : ": cost ")
              << with_decimal(a.value, true) << ", pieces " << a.piece_count << ", guaranteed "
              << (inst.mode == Mode::kCake ? ">= " : "<= ") << format_rational(run.guarantee.per_agent[i]) << "\n";
        }
        out << (inst.mode == Mode::kCake ? "egalitarian welfare " : "egalitarian cost ")
            << with_decimal(report.egalitarian, true) << "\n";
        out << "inequity " << with_decimal(report.inequity, true) << "\n";
        out << "queries: " << run.result.queries.evaluations << " evaluations, " << run.result.queries.cuts
            << " cuts\n";
      } else {
        print(out, Json{{"protocol", run.protocol},
                        {"allocation", allocation_to_json(inst.graph, run.result.allocation)},
                        {"report", report_to_json(report)},
                        {"queries", query_log_to_json(run.result.queries)},
                        {"guarantee", guarantee_to_json(run.guarantee)},
                        {"instance", instance_to_json(inst)}});
      }
      for (const std::string& p : problems) err << "guarantee violated: " << p << "\n";
      return problems.empty() ? 0 : kGuaranteeViolated;
    }

    if (verify->parsed()) {
      const Json doc = read_json(input, in);
      const Instance inst = read_instance(doc);
      Json alloc_json;
      if (!allocation_path.empty()) {
        alloc_json = read_json(allocation_path, in);
        if (alloc_json.contains("allocation")) alloc_json = alloc_json.at("allocation");
      } else if (doc.contains("allocation")) {
        alloc_json = doc.at("allocation");
      } else {
        throw Error(ErrorKind::kParseError, "no allocation given (use --allocation or pipe solve output)");
      }
      const VerificationReport report = verify_allocation(inst, allocation_from_json(inst.graph, alloc_json));
      Json result = report_to_json(report);
      std::vector<std::string> problems;
      if (doc.contains("guarantee")) {
        problems = check_guarantee(guarantee_from_json(doc.at("guarantee")), report);
        result["guarantee_met"] = problems.empty();
      }
      print(out, result);
      for (const std::string& p : problems) err << "guarantee violated: " << p << "\n";
      return problems.empty() ? 0 : kGuaranteeViolated;
    }

    if (fixture_list->parsed()) {
      for (const FixtureInfo& f : fixture_catalog()) {
        out << f.name << "  [" << f.parameters << "]  " << f.summary << "\n";
      }
      return 0;
    }

    if (fixture_build->parsed()) {
      FixtureSpec spec{fixture_name, {}};
      for (const std::string& kv : fixture_params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::kBadParameters, "parameters look like key=value");
        spec.parameters[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      print(out, instance_to_json(build_fixture(spec)));
      return 0;
    }

    if (oracle->parsed()) {
      const Instance inst = read_instance(read_json(input, in));
      GridSearchConfig cfg;
      cfg.grid = grid;
      cfg.objective = parse_objective(objective_name);
      if (*pieces_opt) cfg.piece_budget = pieces;
      cfg.require_complete = complete;
      cfg.frontier_threshold = parse_rational(threshold_text);
      cfg.frontier_strict = strict;
      cfg.max_states = max_states;
      const GridSearchResult r = grid_search_best(inst, cfg);
      if (as_json) {
        print(out, Json{{"feasible", r.feasible},
                        {"optimum", format_rational(r.optimum)},
                        {"grid", grid},
                        {"states", r.states},
                        {"witness", allocation_to_json(inst.graph, r.witness)}});
      } else if (!r.feasible) {
        out << "infeasible on grid 1/" << grid << "\n";
      } else {
        out << "optimum " << format_rational(r.optimum) << "\n";
        out << "note: exact over cuts at multiples of 1/" << grid << " only; the continuous optimum may differ\n";
        out << "states " << r.states << "\n";
      }
      return 0;
    }

    if (powers3->parsed()) {
      const auto [lo, hi] = parse_window(window);
      const PowersOfThreeCheck r = check_powers_of_three(terms, lo, hi);
      if (as_json) {
        Json terms_json = Json::array();
        for (const auto& [c, a] : r.minimizer) terms_json.push_back({c, a});
        print(out, Json{{"holds", r.holds},
                        {"min_gap", format_rational(r.min_gap)},
                        {"minimizer", std::move(terms_json)},
                        {"combinations", r.combinations}});
      } else {
        out << (r.holds ? "holds" : "fails") << ", min gap " << format_rational(r.min_gap) << "\n";
        out << "minimizer:";
        for (const auto& [c, a] : r.minimizer) out << " " << c << "*3^" << a;
        out << "\n";
      }
      return 0;
    }

    if (gen->parsed()) {
      params.family = parse_family(family);
      params.mode = chore ? Mode::kChore : Mode::kCake;
      print(out, instance_to_json(random_instance(seed, params)));
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace graphcake
