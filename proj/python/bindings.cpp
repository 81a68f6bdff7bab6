#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clawtree/graph.hpp"
#include "clawtree/instances.hpp"
#include "clawtree/json.hpp"
#include "clawtree/oracle.hpp"
#include "clawtree/solver.hpp"

namespace py = pybind11;
using namespace clawtree;

namespace {

// Structured results cross the boundary as JSON text; the python package decodes them.
std::string solve_json(const Graph& g, std::size_t m, std::size_t n, bool force, bool fallback) {
  SolverConfig cfg;
  cfg.force = force;
  cfg.exchange_fallback = fallback;
  return to_json(solve(g, m, n, cfg)).dump();
}

std::string branch_json(const Graph& g, std::size_t k, bool force, bool fallback) {
  SolverConfig cfg;
  cfg.force = force;
  cfg.exchange_fallback = fallback;
  return to_json(solve_branch_mode(g, k, cfg)).dump();
}

std::string verify_json(const Graph& g, const std::string& cert, std::size_t m, std::size_t n) {
  const Certificate c = certificate_from_json(nlohmann::json::parse(cert), g.vertex_count());
  return std::string(to_string(verify_certificate(g, c, m, n)));
}

py::object sigma_value(const SigmaValue& s) {
  if (s.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(*s.value);
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

Graph make_graph(std::size_t nv, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs) edges.emplace_back(a, b);
  return Graph::from_edges(nv, edges);
}

}  // namespace

PYBIND11_MODULE(_clawtree, mod) {
  mod.doc() = "Spanning trees with few leaves and branch vertices in claw-free graphs";

  auto solve_error = py::register_exception<SolveError>(mod, "SolveError", PyExc_ValueError);
  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
  py::register_exception<GraphError>(mod, "GraphError", PyExc_ValueError);
  py::register_exception<JsonFormatError>(mod, "CertificateFormatError", PyExc_ValueError);
  py::register_exception<OracleLimit>(mod, "OracleLimit", PyExc_RuntimeError);
  (void)solve_error;

  py::class_<Graph>(mod, "Graph")
      .def(py::init(&make_graph), py::arg("vertex_count"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_static("read", &read_graph_file)
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &edge_pairs)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("to_text", &write_graph)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
               " edges>";
      });

  mod.def("claw_witness", [](const Graph& g) -> py::object {
    const auto c = claw_witness(g);
    if (!c) return py::none();
    return py::make_tuple(c->center, py::make_tuple(c->leaves[0], c->leaves[1], c->leaves[2]));
  });
  mod.def("sigma_k", [](const Graph& g, std::size_t k) { return sigma_value(sigma_k(g, k)); });
  mod.def("sigma_bruteforce", [](const Graph& g, std::size_t k) { return sigma_value(sigma_bruteforce(g, k)); });
  mod.def("is_connected", &is_connected);
  mod.def("line_graph", &line_graph);
  mod.def("_check_hypothesis", [](const Graph& g, std::size_t m, std::size_t n) {
    return to_json(check_hypothesis(g, m, n)).dump();
  });

  mod.def("net_graph", &net_graph);
  mod.def("four_net_graph", &four_net_graph);
  mod.def("cycle_graph", &cycle_graph);
  mod.def("path_graph", &path_graph);
  mod.def("complete_graph", &complete_graph);
  mod.def("spider", &spider, py::arg("legs"), py::arg("length"));
  mod.def("random_connected", &random_connected, py::arg("vertex_count"), py::arg("extra"), py::arg("seed"));
  mod.def("generate", [](const std::string& spec, std::uint64_t seed) { return generate(parse_spec(spec, seed)); },
          py::arg("spec"), py::arg("seed") = 0);

  mod.def("_solve", &solve_json, py::arg("graph"), py::arg("m"), py::arg("n"), py::arg("force") = false,
          py::arg("exchange_fallback") = false, py::call_guard<py::gil_scoped_release>());
  mod.def("_solve_branch_mode", &branch_json, py::arg("graph"), py::arg("k"), py::arg("force") = false,
          py::arg("exchange_fallback") = false, py::call_guard<py::gil_scoped_release>());
  mod.def("_verify_certificate", &verify_json);
  mod.def("_oracle_report", [](const Graph& g) { return to_json(oracle_report(g)).dump(); },
          py::call_guard<py::gil_scoped_release>());
}
