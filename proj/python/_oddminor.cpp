#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oddminor/algorithms.hpp"
#include "oddminor/certificates.hpp"
#include "oddminor/coloring.hpp"
#include "oddminor/erdos_posa.hpp"
#include "oddminor/generators.hpp"
#include "oddminor/graph_io.hpp"
#include "oddminor/odd_minor.hpp"

namespace py = pybind11;
using namespace oddminor;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

Graph from_pairs(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::optional<std::string> detect_odd_clique(const Graph& g, int t, int limit) {
  auto m = find_odd_clique_minor(g, t, OddMinorOptions{limit});
  if (!m) return std::nullopt;
  return serialize_certificate(make_certificate(g, OddMinorBody{complete_graph(t), *m}));
}

py::dict color(const Graph& g, int t, const std::string& mode, int limit) {
  ColorOptions opt;
  opt.limit = limit;
  ColorResult r;
  if (mode == "defective") {
    r = color_defective(g, t, opt);
  } else if (mode == "clustered") {
    r = color_clustered(g, t, opt);
  } else {
    throw InputError("mode must be defective or clustered");
  }
  py::dict out;
  out["palette_bound"] = r.palette_bound;
  if (r.odd_minor) {
    out["outcome"] = "odd-minor";
    out["certificate"] = serialize_certificate(make_certificate(g, OddMinorBody{complete_graph(t), *r.odd_minor}));
    return out;
  }
  out["outcome"] = "colored";
  out["colors"] = r.coloring->colors;
  out["palette_used"] = r.coloring->used();
  out["achieved"] = r.achieved;
  out["family"] = r.family.describe();
  out["certificate"] = serialize_certificate(make_certificate(g, ColoringBody{*r.coloring, r.family}));
  return out;
}

std::string odd_s_paths(const Graph& g, const std::vector<int>& s, int ell, int limit) {
  PathSystemBody body;
  body.s = make_vertex_set(s);
  body.result = odd_s_paths_dichotomy(g, *body.s, ell, DichotomyOptions{limit});
  return serialize_certificate(make_certificate(g, body));
}

std::pair<bool, std::string> verify(const Graph& g, const std::string& text) {
  Verdict v = verify_certificate(g, parse_certificate(text));
  return {v.ok, v.reason};
}

}  // namespace

PYBIND11_MODULE(_oddminor, m) {
  m.doc() = "Odd clique minors, parity-breaking paths and colorings";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", base.ptr());
  py::register_exception<HypothesisUnmet>(m, "HypothesisUnmet", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def(py::init(&from_pairs), py::arg("n"), py::arg("edges"))
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def("vertex_count", &Graph::vertex_count)
      .def("edge_count", &Graph::edge_count)
      .def("max_degree", &Graph::max_degree)
      .def("edges", &edge_pairs)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (!g.contains(v)) throw InputError("vertex out of range");
        auto nb = g.neighbors(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("parse_graph", [](const std::string& text, const std::string& format) {
    return parse_graph(text, parse_format(format));
  }, py::arg("text"), py::arg("format") = "graph6");
  m.def("write_graph", [](const Graph& g, const std::string& format) {
    return write_graph(g, parse_format(format));
  }, py::arg("graph"), py::arg("format") = "graph6");

  m.def("complete_graph", &complete_graph);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);
  m.def("random_graph", &random_graph, py::arg("n"), py::arg("p"), py::arg("seed"));

  m.def("is_bipartite", &is_bipartite);
  m.def("graph_hash", &graph_hash);
  m.def("has_odd_s_path", [](const Graph& g, const std::vector<int>& s) {
    return has_odd_s_path(g, make_vertex_set(s));
  });

  m.def("detect_odd_clique", &detect_odd_clique, py::arg("graph"), py::arg("t"), py::arg("limit") = 14,
        "JSON certificate of an odd K_t minor, or None.");
  m.def("color", &color, py::arg("graph"), py::arg("t"), py::arg("mode") = "defective", py::arg("limit") = 30);
  m.def("odd_s_paths", &odd_s_paths, py::arg("graph"), py::arg("s"), py::arg("ell"), py::arg("limit") = 20,
        "Packing or cover certificate for odd S-paths.");
  m.def("verify_certificate", &verify, py::arg("graph"), py::arg("certificate"),
        "(ok, reason) for a JSON certificate.");

  m.def("bound_M", &bound_M, py::arg("s"), py::arg("t"), py::arg("delta1"), py::arg("delta2"));
  m.def("bound_N", &bound_N, py::arg("s"), py::arg("t"), py::arg("c0") = 10.0);
}
