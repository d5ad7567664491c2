#include "ragrowth/geodesic.hpp"
#include "ragrowth/io.hpp"
#include "ragrowth/link_regular.hpp"
#include "ragrowth/oracle.hpp"
#include "ragrowth/spherical.hpp"
#include "ragrowth/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace ragrowth;

namespace {

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Integer>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::tuple to_py(const RationalFunction& f) {
  return py::make_tuple(to_py(f.numerator().coefficients()), to_py(f.denominator().coefficients()));
}

Integer from_py(const py::handle& h) { return Integer(py::str(h).cast<std::string>(), 10); }

IntPolynomial poly_from_py(const py::sequence& coeffs) {
  std::vector<Integer> c;
  for (const auto& h : coeffs) c.push_back(from_py(h));
  return IntPolynomial(std::move(c));
}

// {(n, (type...)): count}
py::dict to_py(const CountTable& t) {
  py::dict out;
  for (const auto& [key, value] : t.entries()) {
    out[py::make_tuple(key.first, py::tuple(py::cast(key.second.nodes)))] = to_py(value);
  }
  return out;
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Graph make_graph(int nodes, const std::vector<std::pair<int, int>>& edges) { return Graph(nodes, edges); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Growth functions of graph monoids, right-angled Artin groups and right-angled Coxeter groups";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<EnumerationCapExceeded>(m, "EnumerationCapExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("nodes"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_static("load", &load_graph)
      .def_static("complete", &Graph::complete)
      .def_static("empty", &Graph::empty)
      .def_static("path", &Graph::path)
      .def_static("cycle", &Graph::cycle)
      .def_static("complete_bipartite", &Graph::complete_bipartite)
      .def_property_readonly("nodes", &Graph::node_count)
      .def_property_readonly("edges", &Graph::edges)
      .def("cliques",
           [](const Graph& g) {
             py::list out;
             for (const auto& c : enumerate_cliques(g)) out.append(py::tuple(py::cast(c.nodes)));
             return out;
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph(" + graph_to_json(g).dump() + ")"; });

  m.def("clique_polynomial", [](const Graph& g) { return to_py(clique_polynomial(g).coefficients()); });

  m.def(
      "spherical_gf",
      [](const Graph& g, const std::string& s, std::optional<std::vector<int>> allowed) {
        const Structure st = parse_structure(s);
        return to_py(allowed ? spherical_gf_restricted(g, st, *allowed) : spherical_gf_closed(g, st));
      },
      py::arg("graph"), py::arg("structure"), py::arg("allowed") = py::none());

  m.def(
      "geodesic_gf",
      [](const Graph& g, const std::string& s, bool link_regular) {
        const Structure st = parse_structure(s);
        if (!link_regular) return to_py(geodesic_gf_exact(g, st));
        auto p = link_regular_profile(g);
        if (!p) throw GraphError("graph is not link-regular");
        return to_py(geodesic_gf_link_regular(*p, st));
      },
      py::arg("graph"), py::arg("structure"), py::arg("link_regular") = false);

  m.def(
      "expand",
      [](const py::sequence& num, const py::sequence& den, int order) {
        return to_py(series_expand(rf_normalize(poly_from_py(num), poly_from_py(den)), order).coefficients());
      },
      py::arg("num"), py::arg("den"), py::arg("order"));

  m.def("spherical_type_series", [](const Graph& g, const std::string& s, int order) {
    return to_py(spherical_type_series(g, parse_structure(s), order));
  });
  m.def("geodesic_type_series", [](const Graph& g, const std::string& s, int order) {
    return to_py(geodesic_type_series(g, parse_structure(s), order));
  });
  m.def(
      "count_elements",
      [](const Graph& g, const std::string& s, int depth, std::size_t cap) {
        return to_py(count_elements_by_type(g, parse_structure(s), depth, cap));
      },
      py::arg("graph"), py::arg("structure"), py::arg("depth"), py::arg("cap") = kDefaultEnumerationCap);
  m.def(
      "count_geodesics",
      [](const Graph& g, const std::string& s, int depth, std::size_t cap) {
        return to_py(count_geodesics_by_type(g, parse_structure(s), depth, cap));
      },
      py::arg("graph"), py::arg("structure"), py::arg("depth"), py::arg("cap") = kDefaultEnumerationCap);

  m.def("link_regular_profile", [](const Graph& g) -> py::object {
    auto p = link_regular_profile(g);
    if (!p) return py::none();
    return json_to_py(to_json(*p));
  });

  m.def(
      "verify",
      [](const Graph& g, int depth, std::size_t cap) { return json_to_py(to_json(run_verification(g, depth, cap))); },
      py::arg("graph"), py::arg("depth"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("relations", [](const Graph& g, int order) { return json_to_py(to_json(verify_functional_relations(g, order))); });
}
