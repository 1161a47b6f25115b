// Python bindings. Graphs, factors and colorings cross the boundary as the
// same JSON documents the CLI reads and writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "ivc/bigraph.hpp"
#include "ivc/checker.hpp"
#include "ivc/coloring.hpp"
#include "ivc/errors.hpp"
#include "ivc/generators.hpp"
#include "ivc/hunt.hpp"
#include "ivc/io.hpp"
#include "ivc/oracle.hpp"
#include "ivc/pathfactor.hpp"
#include "ivc/transversal.hpp"

namespace py = pybind11;

namespace {

using namespace ivc;

Json parse(const std::string& s) {
  try {
    return Json::parse(s);
  } catch (const Json::exception& e) {
    throw FormatError(e.what());
  }
}

BipartiteMultigraph graph_of(const std::string& s) {
  return graph_from_json(parse(s));
}

std::string generate(const std::string& family, std::size_t k,
                     std::uint64_t seed, bool simple) {
  if (family == "subset6") return graph_to_json(subset_graph_6().graph).dump();
  if (family == "eight-triples") return graph_to_json(eight_triples_graph()).dump();
  if (family == "claw-triple") return graph_to_json(claw_triple_graph()).dump();
  if (family == "k34") return graph_to_json(k34()).dump();
  if (family == "random")
    return graph_to_json(random_34_biregular(k, seed, simple)).dump();
  throw GraphError("unknown family " + family);
}

std::string bundled_factor(const std::string& family) {
  if (family == "subset6") return factor_to_json(subset_graph_6().factor).dump();
  if (family == "eight-triples")
    return factor_to_json(eight_triples_with_factor().factor).dump();
  throw GraphError(family + " has no bundled factor");
}

// {"status": ..., "factor": [...] or null, plus method details}.
std::string find_factor(const std::string& graph, const std::string& method,
                        std::uint64_t max_nodes,
                        const std::vector<std::size_t>& lengths) {
  const BipartiteMultigraph g = graph_of(graph);
  if (!is_biregular(g, 3, 4)) throw GraphError("graph is not (3,4)-biregular");
  Json out = {{"method", method}};
  std::optional<PathFactor> f;
  if (method == "search") {
    const auto r = search_proper_path_factor(g, {max_nodes, lengths});
    out["status"] = to_string(r.status);
    out["nodes"] = r.nodes;
    f = r.factor;
  } else if (method == "oracle") {
    f = oracle_path_factor(g);
    out["status"] = f ? "found" : "none";
  } else if (method == "via24") {
    const auto r = p7_factor_via_24(g);
    out["status"] = r.status == Via24Status::Found      ? "found"
                    : r.status == Via24Status::NoYCover ? "inapplicable"
                                                        : "unknown";
    f = r.factor;
  } else {
    throw GraphError("unknown method " + method);
  }
  out["factor"] = f ? factor_to_json(*f) : Json(nullptr);
  return out.dump();
}

std::string color(const std::string& graph, const std::string& factor) {
  const BipartiteMultigraph g = graph_of(graph);
  return coloring_to_json(color_from_factor(g, factor_from_json(parse(factor))))
      .dump();
}

std::optional<std::string> explain_factor(const std::string& graph,
                                          const std::string& factor) {
  return explain_path_factor(graph_of(graph), factor_from_json(parse(factor)));
}

bool is_interval(const std::string& graph, const std::string& coloring) {
  return check_interval(graph_of(graph), coloring_from_json(parse(coloring)));
}

std::optional<std::string> full_3regular(const std::string& graph) {
  const auto c = oracle_full_3regular(graph_of(graph));
  if (!c) return std::nullopt;
  return certificate_to_json(*c).dump();
}

std::optional<std::string> interval_coloring(const std::string& graph, int k) {
  const auto c = oracle_interval_coloring(graph_of(graph), k);
  if (!c) return std::nullopt;
  return coloring_to_json(*c).dump();
}

std::string hunt(std::size_t k, std::size_t trials, std::uint64_t seed,
                 unsigned jobs, std::uint64_t max_nodes) {
  HuntConfig cfg;
  cfg.k = k;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.jobs = jobs;
  cfg.search.max_nodes = max_nodes;
  HuntReport report;
  {
    py::gil_scoped_release release;
    report = run_hunt(cfg);
  }
  return hunt_report_to_json(report).dump();
}

std::string dot(const std::string& graph, std::optional<std::string> coloring) {
  const BipartiteMultigraph g = graph_of(graph);
  if (!coloring) return to_dot(g);
  const EdgeColoring c = coloring_from_json(parse(*coloring));
  return to_dot(g, &c);
}

}  // namespace

PYBIND11_MODULE(_ivc, m) {
  m.doc() = "Interval 6-colorings of (3,4)-biregular bigraphs (JSON-level API)";

  py::register_exception<ivc::Error>(m, "Error", PyExc_ValueError);

  m.def("generate", &generate, py::arg("family"), py::arg("k") = 1,
        py::arg("seed") = 0, py::arg("simple") = false);
  m.def("bundled_factor", &bundled_factor, py::arg("family"));
  m.def("find_factor", &find_factor, py::arg("graph"),
        py::arg("method") = "search",
        py::arg("max_nodes") = SearchConfig{}.max_nodes,
        py::arg("lengths") = SearchConfig{}.lengths);
  m.def("color", &color, py::arg("graph"), py::arg("factor"));
  m.def("explain_factor", &explain_factor, py::arg("graph"), py::arg("factor"));
  m.def("is_interval", &is_interval, py::arg("graph"), py::arg("coloring"));
  m.def("full_3regular", &full_3regular, py::arg("graph"));
  m.def("interval_coloring", &interval_coloring, py::arg("graph"), py::arg("k"));
  m.def("hunt", &hunt, py::arg("k"), py::arg("trials"), py::arg("seed") = 1,
        py::arg("jobs") = 1, py::arg("max_nodes") = SearchConfig{}.max_nodes);
  m.def("to_dot", &dot, py::arg("graph"), py::arg("coloring") = std::nullopt);
}
