#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bbpmcs/bc_tree.hpp"
#include "bbpmcs/graph.hpp"
#include "bbpmcs/io.hpp"
#include "bbpmcs/oracle.hpp"
#include "bbpmcs/reduction.hpp"
#include "bbpmcs/solver.hpp"

namespace py = pybind11;
using namespace bbpmcs;

namespace {

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace

PYBIND11_MODULE(bbpmcs, m) {
    m.doc() = "block-and-bridge preserving MCS for series-parallel graphs";

    py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_graph", &parse_graph, py::arg("text"),
          "parse the edge-list text format or its JSON mirror");
    m.def("to_edge_list", &to_edge_list);
    m.def("is_connected", &is_connected);
    m.def("is_biconnected", &is_biconnected);
    m.def("is_series_parallel", &is_series_parallel);
    m.def("is_outerplanar", &is_outerplanar);

    m.def(
        "decompose_blocks",
        [](const Graph& g) {
            auto d = decompose_blocks(g);
            py::dict out;
            out["cutvertices"] = d.cutvertices;
            out["blocks"] = d.blocks;
            out["bridges"] = d.bridges;
            return out;
        },
        py::arg("g"));

    m.def(
        "bbp_mcs",
        [](const Graph& g, const Graph& h, bool fast_path) {
            SolveOptions opts;
            opts.fast_path = fast_path;
            SolveResult r = bbp_mcs(g, h, opts);
            return py::make_tuple(r.size, r.outerplanar_fast_path);
        },
        py::arg("g"), py::arg("h"), py::arg("fast_path") = true,
        "returns (size, outerplanar_fast_path)");

    m.def(
        "mcs_brute",
        [](const Graph& g, const Graph& h, std::int64_t budget) -> py::object {
            OracleResult r = mcs_brute(g, h, budget);
            if (r.budget_exceeded) return py::none();
            return py::int_(r.size);
        },
        py::arg("g"), py::arg("h"), py::arg("budget") = kDefaultOracleBudget,
        "exact MCS size, or None when the budget runs out");
    m.def(
        "bbp_mcs_brute",
        [](const Graph& g, const Graph& h, std::int64_t budget) -> py::object {
            OracleResult r = bbp_mcs_brute(g, h, budget);
            if (r.budget_exceeded) return py::none();
            return py::int_(r.size);
        },
        py::arg("g"), py::arg("h"), py::arg("budget") = kDefaultOracleBudget);
    m.def("is_bbp", &is_bbp, py::arg("g"), py::arg("h"), py::arg("mapping"));

    m.def(
        "build_hard_instance",
        [](const std::vector<std::int64_t>& s_x, const std::vector<std::int64_t>& s_y,
           const std::vector<std::int64_t>& b) {
            NmwtsInstance inst{s_x, s_y, b};
            inst.validate();
            HardInstance hi = build_instance(inst);
            py::dict out;
            out["g"] = hi.g;
            out["h"] = hi.h;
            out["roles_g"] = hi.roles_g;
            out["roles_h"] = hi.roles_h;
            return out;
        },
        py::arg("s_x"), py::arg("s_y"), py::arg("b"),
        "NP-hardness gadget graphs for an NMwTS instance");
    m.def(
        "verify_hard_instance",
        [](const std::vector<std::int64_t>& s_x, const std::vector<std::int64_t>& s_y,
           const std::vector<std::int64_t>& b) {
            NmwtsInstance inst{s_x, s_y, b};
            inst.validate();
            HardInstance hi = build_instance(inst);
            VerifyReport rep = verify_instance(hi, inst);
            py::dict out;
            for (const auto& c : rep.checks) out[py::str(c.name)] = c.pass;
            return out;
        },
        py::arg("s_x"), py::arg("s_y"), py::arg("b"));
    m.def(
        "check_nmwts",
        [](const std::vector<std::int64_t>& s_x, const std::vector<std::int64_t>& s_y,
           const std::vector<std::int64_t>& b) {
            NmwtsInstance inst{s_x, s_y, b};
            inst.validate();
            return nmwts_brute(inst);
        },
        py::arg("s_x"), py::arg("s_y"), py::arg("b"));
}
