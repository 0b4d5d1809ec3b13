#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alpharad/canonical.hpp"
#include "alpharad/graph.hpp"
#include "alpharad/graph_io.hpp"
#include "alpharad/matching.hpp"
#include "alpharad/report.hpp"
#include "alpharad/spectral.hpp"
#include "alpharad/theorem.hpp"
#include "alpharad/verifier.hpp"

namespace py = pybind11;
using namespace alpharad;

namespace {

// Accepts float, int, "p/q" strings and fractions.Fraction.
Alpha to_alpha(const py::object& value) {
  if (py::isinstance<py::str>(value)) return Alpha::parse(value.cast<std::string>());
  if (py::isinstance<py::int_>(value)) return Alpha::fraction(value.cast<std::int64_t>(), 1);
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator") && !py::isinstance<py::float_>(value)) {
    return Alpha::fraction(value.attr("numerator").cast<std::int64_t>(), value.attr("denominator").cast<std::int64_t>());
  }
  return Alpha(value.cast<double>());
}

Graph graph_from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "alpha-spectral radius of graphs and the maximal radius for a given matching number";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);
  py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n") = 0)
      .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& text) { return parse_graph6(text); })
      .def_static("from_edge_list", [](const std::string& text) { return parse_edge_list(text); })
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def("canonical_graph6", [](const Graph& g) { return canonical_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("degrees", &Graph::degrees)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("complete_graph", &complete_graph);
  m.def("empty_graph", &empty_graph);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("disjoint_union", &disjoint_union);
  m.def("join", &join);
  m.def("complement", &complement);
  m.def("isomorphic", &isomorphic);

  m.def("matching_number", &matching_number);
  m.def("matching_number_oracle", &matching_number_oracle);
  m.def("has_perfect_matching", &has_perfect_matching);
  m.def("tutte_berge_witness", [](const Graph& g) {
    const auto w = tutte_berge_witness(g);
    py::dict d;
    d["witness_set"] = w.witness_set;
    d["s"] = w.s;
    d["odd_components"] = w.odd_components;
    d["beta"] = w.beta;
    d["q"] = w.q;
    return d;
  });

  m.def("alpha_matrix", [](const Graph& g, const py::object& alpha) { return alpha_matrix(g, to_alpha(alpha).value()); });
  m.def(
      "spectral_radius",
      [](const Graph& g, const py::object& alpha, double tol) {
        const auto r = spectral_radius(g, to_alpha(alpha).value(), tol);
        py::dict d;
        d["rho"] = r.rho;
        d["perron_support"] = r.perron_support;
        d["perron_vector"] = r.perron_vector;
        d["iterations"] = r.iterations;
        d["residual"] = r.residual;
        return d;
      },
      py::arg("g"), py::arg("alpha") = 0, py::arg("tol") = kDefaultTolerance);
  m.def("spectral_radius_oracle",
        [](const Graph& g, const py::object& alpha) { return spectral_radius_oracle(g, to_alpha(alpha).value()); });

  m.def("family_graph", [](std::size_t s, std::vector<std::size_t> parts) {
    return family_graph(make_join_family(s, std::move(parts)));
  });
  m.def("quotient_matrix", [](std::size_t s, std::vector<std::size_t> parts, const py::object& alpha) {
    return quotient_matrix(make_join_family(s, std::move(parts)), to_alpha(alpha).value());
  });
  m.def("quotient_radius", [](std::size_t s, std::vector<std::size_t> parts, const py::object& alpha) {
    return quotient_radius(make_join_family(s, std::move(parts)), to_alpha(alpha).value());
  });
  m.def("closed_form_complete_split", [](std::size_t n, std::size_t beta, const py::object& alpha) {
    return closed_form_complete_split(n, beta, to_alpha(alpha).value());
  });
  m.def("cubic_f", [](double lambda, std::size_t n, std::size_t beta, std::size_t s, const py::object& alpha) {
    return cubic_f(lambda, n, beta, s, to_alpha(alpha).value());
  });
  m.def(
      "largest_root_f",
      [](std::size_t n, std::size_t beta, std::size_t s, const py::object& alpha, double tol) {
        return largest_root_f(n, beta, s, to_alpha(alpha).value(), tol);
      },
      py::arg("n"), py::arg("beta"), py::arg("s"), py::arg("alpha"), py::arg("tol") = kRootTolerance);
  m.def("shift_function_f", [](double delta, double lambda, std::size_t s, std::vector<std::size_t> parts,
                               const py::object& alpha) {
    return shift_function_f(delta, lambda, make_join_family(s, std::move(parts)), to_alpha(alpha).value());
  });

  m.def("threshold_n_star", [](std::size_t beta, const py::object& alpha) { return threshold_n_star(beta, to_alpha(alpha)); });
  m.def("predicted_bound", [](std::size_t n, std::size_t beta, const py::object& alpha) {
    return predicted_bound(n, beta, to_alpha(alpha));
  });
  m.def("_classify_regime_json", [](std::size_t n, std::size_t beta, const py::object& alpha) {
    const Alpha a = to_alpha(alpha);
    return to_json(classify_regime(n, beta, a), n, beta, a).dump();
  });
  m.def(
      "_exhaustive_max_json",
      [](std::size_t n, std::size_t beta, const py::object& alpha, double tol, unsigned jobs) {
        const Alpha a = to_alpha(alpha);
        py::gil_scoped_release release;
        return to_json_line(exhaustive_max(n, beta, a, VerifyOptions{tol, jobs}));
      },
      py::arg("n"), py::arg("beta"), py::arg("alpha"), py::arg("tol") = kVerifyTolerance, py::arg("jobs") = 1);
  m.def(
      "_family_search_json",
      [](std::size_t n, std::size_t beta, const py::object& alpha, double tol) {
        return to_json(family_search(n, beta, to_alpha(alpha), tol)).dump();
      },
      py::arg("n"), py::arg("beta"), py::arg("alpha"), py::arg("tol") = kVerifyTolerance);
  m.def("enumerate_graphs", [](std::size_t n) { return enumerate_graphs(n); });
  m.def("shift_monotonicity_check", [](std::size_t s, std::vector<std::size_t> parts, const py::object& alpha) {
    return shift_monotonicity_check(make_join_family(s, std::move(parts)), to_alpha(alpha).value());
  });
  m.def("case2_sample_check", [](std::size_t beta, double alpha, std::size_t s, std::size_t n) {
    const auto r = case2_sample_check(beta, alpha, s, n);
    py::dict d;
    d["applicable"] = r.applicable;
    d["positive"] = r.positive;
    d["value"] = r.value;
    d["probe"] = r.probe;
    return d;
  });
}
