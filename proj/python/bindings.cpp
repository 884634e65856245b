#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "coverbound/bounds.hpp"
#include "coverbound/certify.hpp"
#include "coverbound/cli.hpp"
#include "coverbound/cover.hpp"
#include "coverbound/generators.hpp"
#include "coverbound/markov.hpp"
#include "coverbound/report.hpp"
#include "coverbound/spectra.hpp"

namespace py = pybind11;
using namespace coverbound;

namespace {

py::object to_python(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

ChainSpec make_chain(const WeightedGraph& g, const std::string& name) {
    if (name == "uniform") return uniform_nb_chain(g);
    if (name == "weighted") return weighted_nb_chain(g);
    throw InputError("unknown chain '" + name + "' (expected uniform or weighted)");
}

EdgeFunction make_function(const std::string& name) {
    if (name == "one") return EdgeFunction::one();
    if (name == "inv-sqrt-complement") return EdgeFunction::inverse_sqrt_complement();
    throw InputError("unknown edge function '" + name + "' (expected one or inv-sqrt-complement)");
}

Vertex vertex_arg(const WeightedGraph& g, Vertex v) {
    if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
    return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectral bounds through non-backtracking walks and unraveled balls";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", base);
    py::register_exception<PreconditionError>(m, "PreconditionError", base);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base);
    py::register_exception<CertificationError>(m, "CertificationError", base);

    py::class_<WeightedGraph>(m, "Graph")
        .def_property_readonly("vertex_count", &WeightedGraph::vertex_count)
        .def_property_readonly("edge_count", &WeightedGraph::edge_count)
        .def_property_readonly("labels",
                               [](const WeightedGraph& g) {
                                   return std::vector<std::string>(g.labels().begin(), g.labels().end());
                               })
        .def_property_readonly("edges",
                               [](const WeightedGraph& g) {
                                   std::vector<std::tuple<Vertex, Vertex, double>> out;
                                   for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.weight);
                                   return out;
                               })
        .def("degree", [](const WeightedGraph& g, Vertex v) { return g.degree(vertex_arg(g, v)); })
        .def("weighted_degree", [](const WeightedGraph& g, Vertex v) { return weighted_degree(g, vertex_arg(g, v)); })
        .def("regularity", [](const WeightedGraph& g) { return regularity(g); })
        .def("is_connected", [](const WeightedGraph& g) { return is_connected(g); })
        .def("serialize", [](const WeightedGraph& g) { return serialize_graph(g); })
        .def("__repr__", [](const WeightedGraph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("parse_graph", [](const std::string& text) { return parse_graph(std::string_view(text)); },
          py::arg("text"));
    m.def("read_graph", &read_graph_file, py::arg("path"));
    m.def("from_edges",
          [](std::size_t n, const std::vector<std::tuple<Vertex, Vertex, double>>& edges) {
              std::vector<Edge> list;
              for (const auto& [u, v, w] : edges) list.push_back({u, v, w});
              return WeightedGraph::from_edges(n, list);
          },
          py::arg("n"), py::arg("edges"));

    m.def("cycle", &cycle_graph, py::arg("n"));
    m.def("path", &path_graph, py::arg("n"));
    m.def("complete", &complete_graph, py::arg("n"));
    m.def("petersen", &petersen_graph);
    m.def("random_regular", &random_regular_graph, py::arg("n"), py::arg("d"), py::arg("seed") = 1);
    m.def("weighted_regular", &weighted_regular_graph, py::arg("n"), py::arg("d"), py::arg("wmin"),
          py::arg("wmax"), py::arg("seed") = 1);

    m.def("unravel",
          [](const WeightedGraph& g, Vertex v, std::uint32_t r, std::size_t budget) {
              const UnraveledBall b = unravel(g, vertex_arg(g, v), r, budget);
              std::vector<std::tuple<NodeId, NodeId, double>> edges;
              for (NodeId i = 1; i < b.size(); ++i) edges.emplace_back(b[i].parent, i, b[i].weight);
              py::dict out;
              out["nodes"] = b.size();
              out["level_sizes"] = b.level_sizes();
              out["edges"] = edges;
              out["lambda1"] = lambda1(TreeOperator(b)).value;
              return out;
          },
          py::arg("graph"), py::arg("vertex"), py::arg("r"), py::arg("budget") = kDefaultNodeBudget);

    m.def("stationary",
          [](const WeightedGraph& g, const std::string& chain) {
              const ChainSpec c = make_chain(g, chain);
              const auto pi = c.pi();
              return std::vector<double>(pi.begin(), pi.end());
          },
          py::arg("graph"), py::arg("chain") = "uniform");

    m.def("lambda1", [](const WeightedGraph& g) { return lambda1(AdjacencyOperator(g)).value; }, py::arg("graph"));
    m.def("lambda2", [](const WeightedGraph& g) { return lambda2(g).value; }, py::arg("graph"));
    m.def("path_lambda1", &path_lambda1, py::arg("n"));

    m.def("general_rhs",
          [](const WeightedGraph& g, const std::string& chain, const std::string& fn) {
              return general_rhs(g, make_chain(g, chain), make_function(fn));
          },
          py::arg("graph"), py::arg("chain") = "uniform", py::arg("g") = "one");
    m.def("strong_rhs",
          [](const WeightedGraph& g, double w, const std::string& fn) { return strong_rhs(g, w, make_function(fn)); },
          py::arg("graph"), py::arg("w"), py::arg("g") = "one");
    m.def("simple_rhs", &simple_rhs, py::arg("graph"), py::arg("w"));
    m.def("weak_rhs", [](double w, double d) { return to_python(to_json(weak_rhs(w, d))); }, py::arg("w"),
          py::arg("d"));
    m.def("alon_boppana_rhs", &alon_boppana_rhs, py::arg("w"), py::arg("d"), py::arg("r"));
    m.def("cover_spectral_radii", [](const WeightedGraph& g, int r) { return cover_spectral_radii(g, r); },
          py::arg("graph"), py::arg("r"));

    m.def("mu", &mu);
    m.def("threshold_degree", &threshold_degree);
    m.def("profile", &profile, py::arg("y"), py::arg("w"));
    m.def("refined_constants", [] {
        const RefinedConstants c = refined_constants();
        return py::make_tuple(c.t0, c.x0);
    });
    m.def("tangent_line",
          [](double t, double w) {
              const TangentLine l = tangent_line(t, w);
              return py::make_tuple(l.slope, l.intercept);
          },
          py::arg("t"), py::arg("w"));

    m.def("theorem_certificate",
          [](const WeightedGraph& g, int r, const std::string& chain, const std::string& fn) {
              return to_python(to_json(build_theorem_vector(g, make_chain(g, chain), make_function(fn), r), g));
          },
          py::arg("graph"), py::arg("r"), py::arg("chain") = "uniform", py::arg("g") = "one");
    m.def("case1_certificate",
          [](const WeightedGraph& g, EdgeId e, int r) { return to_python(to_json(case1_vector(g, e, r), g)); },
          py::arg("graph"), py::arg("edge"), py::arg("r"));
    m.def("lambda2_certificate",
          [](const WeightedGraph& g, int r) { return to_python(to_json(lambda2_certificate(g, r), g)); },
          py::arg("graph"), py::arg("r"));

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int code = cli::run(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"));
}
