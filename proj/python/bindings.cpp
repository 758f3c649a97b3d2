#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "graphcake/cli.hpp"
#include "graphcake/errors.hpp"
#include "graphcake/fixtures.hpp"
#include "graphcake/json_io.hpp"
#include "graphcake/oracle.hpp"
#include "graphcake/protocols.hpp"
#include "graphcake/topology.hpp"

namespace py = pybind11;
using namespace graphcake;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
}

std::tuple<int, std::string, std::string> run_cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = dispatch(args, in, out, err);
  }
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of graphcake; documents cross the boundary as JSON text.";

  static py::exception<Error> error(m, "GraphcakeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("run_cli", &run_cli, py::arg("args"), py::arg("stdin") = "",
        "Runs the command-line tool in-process and returns (exit code, stdout, stderr).");

  m.def("protocol_names", &protocol_names);

  m.def("fixture_catalog", [] {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const FixtureInfo& f : fixture_catalog()) out.emplace_back(f.name, f.parameters, f.summary);
    return out;
  });

  m.def(
      "build_fixture",
      [](const std::string& name, const std::map<std::string, std::string>& params) {
        return instance_to_json(build_fixture({name, params})).dump();
      },
      py::arg("name"), py::arg("params") = std::map<std::string, std::string>{});

  m.def(
      "classify",
      [](const std::string& graph) {
        const Json j = parse(graph);
        const CakeGraph g = graph_from_json(j.contains("graph") ? j.at("graph") : j);
        return witness_to_json(g, classify_almost_bridgeless(g)).dump();
      },
      py::arg("graph"));

  m.def(
      "powers_of_three",
      [](int t, int lo, int hi) {
        const PowersOfThreeCheck r = check_powers_of_three(t, lo, hi);
        return py::make_tuple(r.holds, format_rational(r.min_gap), r.minimizer, r.combinations);
      },
      py::arg("t"), py::arg("lo"), py::arg("hi"));
}
