#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "imcn/cli.hpp"
#include "imcn/evaluators.hpp"
#include "imcn/lexproduct.hpp"
#include "imcn/oracle.hpp"
#include "imcn/ser.hpp"

namespace py = pybind11;
using namespace imcn;

namespace {

GraphFormat parse_format(const std::string& name) {
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "edgelist") return GraphFormat::edgelist;
    throw input_error("unknown format '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact interleaved multichromatic analysis of undirected graphs";

    py::register_exception<input_error>(m, "InputError");
    py::register_exception<cap_exceeded>(m, "CapExceeded");
    py::register_exception<invariant_violation>(m, "InvariantViolation");

    py::class_<Rational>(m, "Rational")
        .def(py::init<long long, long long>(), py::arg("num"), py::arg("den"))
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; })
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
        .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; })
        .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; })
        .def("__float__",
             [](const Rational& r) { return static_cast<double>(r.num()) / r.den(); });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"),
             py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("n", &Graph::node_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); }, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("components", &Graph::components)
        .def("is_forest", &Graph::is_forest)
        .def("serialize",
             [](const Graph& g, const std::string& format) { return g.serialize(parse_format(format)); },
             py::arg("format") = "edgelist")
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.node_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_graph",
          [](const std::string& text, const std::string& format) {
              return parse_graph(text, parse_format(format));
          },
          py::arg("text"), py::arg("format"));
    m.def("parse_graph_auto", [](const std::string& text) { return parse_graph_auto(text); },
          py::arg("text"));

    py::class_<Orientation>(m, "Orientation")
        .def(py::init<Graph, std::vector<bool>>(), py::arg("graph"), py::arg("dirs"))
        .def_static("from_string", &Orientation::from_string, py::arg("graph"), py::arg("text"))
        .def_property_readonly("graph", &Orientation::graph)
        .def_property_readonly("dirs", &Orientation::dirs)
        .def("sources", &Orientation::sources)
        .def("sinks", &Orientation::sinks)
        .def("reversed", &Orientation::reversed)
        .def("__str__", &Orientation::str)
        .def("__eq__", [](const Orientation& a, const Orientation& b) { return a == b; })
        .def("__repr__", [](const Orientation& o) { return "Orientation(" + o.str() + ")"; });

    py::class_<SimpleCycle>(m, "SimpleCycle")
        .def_readonly("nodes", &SimpleCycle::nodes)
        .def_property_readonly("size", &SimpleCycle::size)
        .def("__str__", &SimpleCycle::str)
        .def("__eq__", [](const SimpleCycle& a, const SimpleCycle& b) { return a == b; })
        .def("__repr__", [](const SimpleCycle& c) { return "SimpleCycle(" + c.str() + ")"; });

    py::class_<IntWitness>(m, "IntWitness")
        .def_readonly("value", &IntWitness::value)
        .def_readonly("orientation", &IntWitness::orientation)
        .def_readonly("critical_cycle", &IntWitness::critical_cycle)
        .def_readonly("suggested_k", &IntWitness::suggested_k);

    py::class_<ChiWitness>(m, "ChiWitness")
        .def_readonly("chi", &ChiWitness::chi)
        .def_readonly("orientation", &ChiWitness::orientation);

    py::class_<KTupleColoring>(m, "KTupleColoring")
        .def_readonly("k", &KTupleColoring::k)
        .def_readonly("colors", &KTupleColoring::colors)
        .def_readonly("palette", &KTupleColoring::palette)
        .def_readonly("interleaved", &KTupleColoring::interleaved)
        .def("__str__", &KTupleColoring::str);

    py::class_<WindingPath>(m, "WindingPath")
        .def_readonly("cycle", &WindingPath::cycle)
        .def_readonly("orientation", &WindingPath::orientation)
        .def_readonly("k", &WindingPath::k)
        .def_readonly("t", &WindingPath::t)
        .def_readonly("eps_plus", &WindingPath::eps_plus)
        .def_readonly("eps_minus", &WindingPath::eps_minus)
        .def_readonly("path", &WindingPath::path)
        .def_property_readonly("count", &WindingPath::count);

    py::class_<SerRun>(m, "SerRun")
        .def_readonly("states", &SerRun::states)
        .def_readonly("tail_start", &SerRun::tail_start)
        .def_readonly("period", &SerRun::period)
        .def_readonly("ops_per_node", &SerRun::ops_per_node);

    m.def("count_acyclic", [](const Graph& g) { return count_acyclic(g); }, py::arg("graph"));
    m.def("enumerate_acyclic", [](const Graph& g) { return enumerate_acyclic(g); },
          py::arg("graph"));
    m.def("enumerate_simple_cycles",
          [](const Graph& g) { return enumerate_simple_cycles(g); }, py::arg("graph"));
    m.def("direction_counts",
          [](const SimpleCycle& c, const Orientation& o) { return direction_counts(c, o); },
          py::arg("cycle"), py::arg("orientation"));

    m.def("chi_int_star", [](const Graph& g) { return chi_int_star(g); }, py::arg("graph"));
    m.def("chi_via_orientations", [](const Graph& g) { return chi_via_orientations(g); },
          py::arg("graph"));
    m.def("chi_int_k",
          [](const Graph& g, int k) {
              const ChiIntK r = chi_int_k(g, k);
              return py::make_tuple(r.value, r.witness.base);
          },
          py::arg("graph"), py::arg("k"));
    m.def("derive_interleaved_coloring",
          [](const Graph& g, const Orientation& o, int k) {
              return derive_interleaved_coloring(g, o, k);
          },
          py::arg("graph"), py::arg("orientation"), py::arg("k"));
    m.def("winding_path",
          [](const SimpleCycle& c, const Orientation& o, int k) { return winding_path(c, o, k); },
          py::arg("cycle"), py::arg("orientation"), py::arg("k"));

    m.def("ser_step", &ser_step, py::arg("orientation"));
    m.def("ser_run", [](const Orientation& o) { return ser_run(o); }, py::arg("orientation"));
    m.def("concurrency", &concurrency, py::arg("run"));
    m.def("best_concurrency", [](const Graph& g) { return best_concurrency(g); },
          py::arg("graph"));

    m.def("brute_chi_k", &oracle::brute_chi_k, py::arg("graph"), py::arg("k"),
          py::arg("interleaved"));
    m.def("brute_chromatic", &oracle::brute_chromatic, py::arg("graph"));
    m.def("brute_cycles", &oracle::brute_cycles, py::arg("graph"));
    m.def("brute_acyclic_count", &oracle::brute_acyclic_count, py::arg("graph"));

    m.def("run_cli",
          [](const std::vector<std::string>& args, const std::string& stdin_text) {
              std::istringstream in(stdin_text);
              std::ostringstream out, err;
              const int code = run_cli(args, in, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), py::arg("stdin_text") = "");
}
