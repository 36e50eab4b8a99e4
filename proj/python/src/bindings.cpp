#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "degsim/canon.hpp"
#include "degsim/constructions.hpp"
#include "degsim/report.hpp"
#include "degsim/search.hpp"
#include "degsim/similarity.hpp"
#include "degsim/spectra.hpp"
#include "degsim/srg.hpp"

namespace py = pybind11;
using namespace degsim;

namespace {

// results cross the boundary as JSON text; the Python side loads it
std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "degsim native core";

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>())
      .def_static("from_edges", &Graph::from_edges)
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("graph6", [](const Graph& g) { return emit_graph6(g); })
      .def("order", &Graph::order)
      .def("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("degrees", &Graph::degrees)
      .def("add_edge", &Graph::add_edge)
      .def("adjacent", &Graph::adjacent)
      .def("permuted", &Graph::permuted)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + emit_graph6(g) + "')"; });

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("named_graph", [](const std::string& name) {
    auto g = named_graph(name);
    if (!g) throw py::value_error("unknown named graph: " + name);
    return *g;
  });
  m.def("read_graphs", &read_graphs);
  m.def("complement", &complement);
  m.def("certificate", [](const Graph& g) { return canonical_form(g).certificate; });
  m.def("isomorphic", &isomorphic);
  m.def("mu_polynomial", [](const Graph& g) { return dump(to_json(mu_polynomial(g))); });
  m.def("alpha_polynomial", [](const Graph& g) { return dump(to_json(alpha_polynomial(g), "alpha")); });
  m.def("mu_snf", [](const Graph& g) { return dump(to_json(mu_snf(g))); });
  m.def("invariants", [](const Graph& g, std::size_t walks) { return dump(to_json(invariants_report(g, walks))); },
        py::arg("g"), py::arg("walks") = 6);
  m.def(
      "cospectral",
      [](const Graph& a, const Graph& b, const std::string& mode) {
        auto md = parse_cospectral_mode(mode);
        if (!md) throw py::value_error("unknown mode: " + mode);
        return cospectral(a, b, *md);
      },
      py::arg("g1"), py::arg("g2"), py::arg("mode") = "mu");
  m.def(
      "degree_similar",
      [](const Graph& a, const Graph& b, std::uint64_t seed) {
        DsConfig c;
        c.seed = seed;
        return dump(to_json(degree_similar(a, b, c)));
      },
      py::arg("g1"), py::arg("g2"), py::arg("seed") = 0);
  m.def("mckay_pair", [](std::size_t m_) { return mckay_pair(path_base(m_)); });
  m.def("srg_params", [](const Graph& g) -> py::object {
    auto p = srg_params(g);
    if (!p) return py::none();
    return py::make_tuple(p->n, p->d, p->a, p->c);
  });
  m.def("enumerate_unicyclic", [](std::size_t n) { return enumerate_unicyclic(n); });
}
