#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "fading/claims.hpp"
#include "fading/coloring.hpp"
#include "fading/errors.hpp"
#include "fading/families.hpp"
#include "fading/family_spec.hpp"
#include "fading/graph.hpp"
#include "fading/graph_io.hpp"
#include "fading/oracle.hpp"
#include "fading/rainbow.hpp"
#include "fading/report.hpp"
#include "fading/scan.hpp"

namespace py = pybind11;
using namespace fading;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.
std::string dump(const nlohmann::json& j)
{
    return j.dump();
}

FadeSet to_fadeset(const std::vector<int>& vertices)
{
    FadeSet s;
    for (int v : vertices)
        s.insert(v);
    return s;
}

std::vector<int> members(VertexSet s)
{
    return {s.begin(), s.end()};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    py::register_exception<OracleRefusal>(m, "OracleRefusal", PyExc_RuntimeError);
    py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("edges", &Graph::edges)
        .def("neighbours", [](const Graph& g, int v) { return members(g.neighbours(v)); })
        .def("closed_neighbourhood", [](const Graph& g, int v) { return members(g.closed_neighbourhood(v)); })
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("graph6", [](const Graph& g) { return write_graph6(g); })
        .def("edge_list", [](const Graph& g) { return write_edge_list(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ", graph6='" +
                   write_graph6(g) + "')";
        });

    m.def("from_graph6", &parse_graph6, py::arg("text"));
    m.def("from_edge_list", &parse_edge_list, py::arg("text"));
    m.def("family", &build_family, py::arg("spec"));
    m.def("is_connected", [](const Graph& g) { return is_connected(g); });
    m.def("is_bipartite", &is_bipartite);

    m.def("mycielskian", &mycielskian);
    m.def("thorn", [](const Graph& g, const std::vector<int>& t) { return thorn(g, t); });
    m.def("join", &join);
    m.def("corona", &corona);
    m.def("windmill", &windmill, py::arg("g"), py::arg("copies"));

    m.def("chromatic_number", &chromatic_number);
    m.def("clique_number", &clique_number);
    m.def("chromatic_colorings", [](const Graph& g) {
        std::vector<std::vector<int>> out;
        for_each_chromatic_coloring(g, [&](const Coloring& c) { out.push_back(c.colors); });
        return out;
    });

    m.def(
        "rainbow_vertices",
        [](const Graph& g, const std::vector<int>& colors, const std::vector<int>& faded) {
            return members(rainbow_vertices(g, Coloring::from(colors), to_fadeset(faded)).yielders);
        },
        py::arg("g"), py::arg("colors"), py::arg("faded") = std::vector<int>{});
    m.def(
        "fading_for_coloring",
        [](const Graph& g, const std::vector<int>& colors, int threshold) {
            return dump(to_json(fading_for_coloring(g, Coloring::from(colors), threshold)));
        },
        py::arg("g"), py::arg("colors"), py::arg("threshold"));
    m.def(
        "uncovered_bound",
        [](const Graph& g, const std::vector<int>& colors) { return uncovered_bound(g, Coloring::from(colors)); });
    m.def(
        "analyze",
        [](const Graph& g, const std::string& mode, int jobs) {
            const GraphAnalysis a = [&] {
                py::gil_scoped_release release;
                return analyze(g, jobs);
            }();
            return dump(summary_json(a, parse_fade_mode(mode), write_graph6(g)));
        },
        py::arg("g"), py::arg("mode") = "threshold", py::arg("jobs") = 1);

    m.def(
        "oracle_invariants",
        [](const Graph& g, int cap) {
            const Invariants inv = oracle::invariants(g, cap);
            return dump({{"chi", inv.chi},
                         {"omega", inv.omega},
                         {"r_min", inv.r_min},
                         {"r_max", inv.r_max},
                         {"f_minus_threshold", inv.f_minus_threshold},
                         {"f_minus_strict", inv.f_minus_strict},
                         {"f_plus", inv.f_plus}});
        },
        py::arg("g"), py::arg("cap") = oracle::default_cap);

    m.def("claim_ids", &claim_ids);
    m.def(
        "run_claim",
        [](const std::string& id, const std::string& corpus, const std::string& trees, const std::string& mode,
           int exhaustive_n, int max_base_n, bool use_oracle, int jobs) {
            ClaimOptions options;
            options.mode = parse_fade_mode(mode);
            options.exhaustive_n = exhaustive_n;
            options.max_base_n = max_base_n;
            options.use_oracle = use_oracle;
            options.jobs = jobs;
            py::gil_scoped_release release;
            return dump(to_json(run_claim(id, load_corpus(corpus, trees), options)));
        },
        py::arg("claim_id"), py::arg("corpus"), py::arg("trees"), py::arg("mode") = "threshold",
        py::arg("exhaustive_n") = 7, py::arg("max_base_n") = 4, py::arg("use_oracle") = false, py::arg("jobs") = 1);

    m.def(
        "scan",
        [](const std::vector<std::string>& lines, int max_n, bool use_oracle, int jobs) {
            ScanOptions options;
            options.max_n = max_n;
            options.use_oracle = use_oracle;
            options.jobs = jobs;
            py::gil_scoped_release release;
            return dump(to_json(scan_conjecture(lines, options)));
        },
        py::arg("lines"), py::arg("max_n") = 0, py::arg("use_oracle") = false, py::arg("jobs") = 1);
}
