#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specgraph/census.hpp"
#include "specgraph/connectivity.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/quotient.hpp"
#include "specgraph/rewiring.hpp"
#include "specgraph/spectral.hpp"

namespace py = pybind11;
using namespace specgraph;

namespace {

// Python ints from exact coefficients, lowest degree first.
py::list coefficients(const IntPoly& p) {
  py::list out;
  py::object to_int = py::module_::import("builtins").attr("int");
  for (const BigInt& c : p.coeffs()) out.append(to_int(py::str(c.str())));
  return out;
}

py::object json_to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_specgraph, m) {
  m.doc() = "Spectral radius, connectivity and census routines";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_edges",
                  [](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); },
                  py::arg("n"), py::arg("edges"))
      .def("order", &Graph::order)
      .def("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__len__", &Graph::order)
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("complete", &complete);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("star_graph", &star_graph);
  m.def("join", &join);
  m.def("disjoint_union", &disjoint_union);
  m.def(
      "extremal_graph", [](int n, int k, int delta) { return extremal_graph(ExtremalParams::make(n, k, delta)); },
      py::arg("n"), py::arg("k"), py::arg("delta"));
  m.def("realizes_min_degree",
        [](int n, int k, int delta) { return ExtremalParams::make(n, k, delta).realizes_min_degree(); });
  m.def("shiu_graph", &shiu_graph, py::arg("n"), py::arg("k"));
  m.def("min_degree", &min_degree);
  m.def("degree_sequence", &degree_sequence);
  m.def("is_connected", &is_connected);
  m.def("connected_components", &connected_components);
  m.def("induced_subgraph", [](const Graph& g, const std::vector<int>& s) { return induced_subgraph(g, s); });
  m.def("g6_encode", &g6_encode);
  m.def("g6_decode", &g6_decode);

  m.def(
      "perron",
      [](const Graph& g, double tol) {
        PerronOptions o;
        o.tol = tol;
        const PerronPair p = perron(g, o);
        return py::make_tuple(p.rho, p.vec);
      },
      py::arg("g"), py::arg("tol") = 1e-13, "(rho, unit Perron vector) of a connected graph");
  m.def("spectrum", [](const Graph& g) { return full_spectrum(adjacency_matrix(g)).eigs; },
        "Adjacency eigenvalues in ascending order");
  m.def("charpoly", [](const Graph& g) { return coefficients(int_charpoly(g)); },
        "Exact coefficients of det(xI - A), lowest degree first");
  m.def("compare_rho", [](const Graph& g, const Graph& h) { return std::string(to_string(exact_compare_rho(g, h))); });

  m.def(
      "vertex_connectivity",
      [](const Graph& g) {
        const Connectivity c = vertex_connectivity(g);
        py::dict d;
        d["kappa"] = c.kappa;
        d["complete"] = c.complete;
        d["cut"] = c.witness.cut;
        d["components"] = c.witness.side_components;
        return d;
      },
      "kappa with a minimum cut and the components it leaves");
  m.def("is_k_connected", &is_k_connected);
  m.def("lemma_guarantee", &lemma_guarantee);

  m.def("cubic_coefficients", [](int n, int k, int delta) {
    const CubicCoeffs c = cubic_coefficients(ExtremalParams::make(n, k, delta));
    return py::make_tuple(c.c2, c.c1, c.c0);
  });
  m.def("largest_cubic_root", [](long long c2, long long c1, long long c0) {
    return largest_cubic_root(CubicCoeffs{c2, c1, c0});
  });
  m.def("three_part_quotient",
        [](int n, int k, int delta) { return three_part_quotient(ExtremalParams::make(n, k, delta)).integer_entries(); });

  m.def(
      "rewire",
      [](const Graph& g, int pivot, const std::vector<int>& del_set, const std::vector<int>& add_set) {
        return rewire(g, RewireSpec{pivot, del_set, add_set});
      },
      py::arg("g"), py::arg("pivot"), py::arg("del_set"), py::arg("add_set"));
  m.def(
      "verify_monotonicity",
      [](const Graph& g, int pivot, const std::vector<int>& del_set, const std::vector<int>& add_set) {
        const MonotonicityReport r = verify_monotonicity(g, RewireSpec{pivot, del_set, add_set});
        py::dict d;
        d["rho_before"] = r.rho_before;
        d["rho_after"] = r.rho_after;
        d["sum_del"] = r.sum_del;
        d["sum_add"] = r.sum_add;
        d["quad_form_residual"] = r.quad_form_residual;
        d["verdict"] = to_string(r.verdict);
        d["reason"] = r.reason;
        return d;
      },
      py::arg("g"), py::arg("pivot"), py::arg("del_set"), py::arg("add_set"));

  m.def(
      "run_census",
      [](int n, int k, int delta, unsigned shards) {
        CensusOptions o;
        o.shards = shards;
        CensusResult r;
        {
          py::gil_scoped_release release;
          r = run_census(ClassSpec::make(n, k, delta), o);
        }
        return json_to_python(to_json(r));
      },
      py::arg("n"), py::arg("k"), py::arg("delta"), py::arg("shards") = 1,
      "Exhaustive maximizer search over one class (orders 3..7); returns the JSON document as a dict");
}
