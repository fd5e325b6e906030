#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chroma/clique.hpp"
#include "chroma/graph.hpp"
#include "chroma/solver.hpp"

namespace py = pybind11;
using namespace chroma;

namespace {

SolverConfig config_from_kwargs(double cutoff, std::uint64_t seed, double alpha,
    double lambda, double exactlb_budget, int size_upper, double clique_budget,
    bool deterministic, double tick)
{
    SolverConfig cfg;
    cfg.cutoff = cutoff;
    cfg.seed = seed;
    cfg.alpha = alpha;
    cfg.lambda = lambda;
    cfg.exactlb_budget = exactlb_budget;
    cfg.size_upper = size_upper;
    cfg.clique_budget = clique_budget;
    cfg.deterministic_clock = deterministic;
    cfg.seconds_per_tick = tick;
    return cfg;
}

Graph graph_from_text(const std::string& text, const std::string& format)
{
    std::istringstream in(text);
    InputFormat fmt = InputFormat::autodetect;
    if (format == "dimacs")
        fmt = InputFormat::dimacs;
    else if (format == "edgelist")
        fmt = InputFormat::edgelist;
    else if (format != "auto")
        throw std::invalid_argument("format must be dimacs, edgelist or auto");
    return parse_graph(in, fmt).graph;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "graph coloring solver: clique lower bounds, low-degree "
              "reduction, core/mixed-degree greedy coloring";

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("m", &Graph::num_edges)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors",
            [](const Graph& g, int v) {
                auto nb = g.neighbors(v);
                return std::vector<int>(nb.begin(), nb.end());
            },
            py::arg("v"))
        .def("label", &Graph::label, py::arg("v"))
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices())
                + ", m=" + std::to_string(g.num_edges()) + ")";
        });

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("num_colors", &SolveResult::num_colors)
        .def_readonly("lb", &SolveResult::lb_final)
        .def_readonly("optimal", &SolveResult::optimal)
        .def_readonly("time_to_best", &SolveResult::time_to_best)
        .def_readonly("iterations", &SolveResult::iterations)
        .def_property_readonly("lb_stage",
            [](const SolveResult& r) { return std::string(to_string(r.lb_stage)); })
        .def_property_readonly("ub_stage",
            [](const SolveResult& r) { return std::string(to_string(r.ub_stage)); })
        .def_property_readonly("colors",
            [](const SolveResult& r) { return r.coloring.assign; })
        .def("__repr__", [](const SolveResult& r) {
            return "SolveResult(num_colors=" + std::to_string(r.num_colors)
                + ", lb=" + std::to_string(r.lb_final)
                + ", optimal=" + std::string(r.optimal ? "True" : "False") + ")";
        });

    m.def("parse_graph", &graph_from_text, py::arg("text"),
        py::arg("format") = "auto",
        "parse a DIMACS .col or edge-list document from a string");
    m.def("load_graph",
        [](const std::string& path, const std::string& format) {
            InputFormat fmt = InputFormat::autodetect;
            if (format == "dimacs")
                fmt = InputFormat::dimacs;
            else if (format == "edgelist")
                fmt = InputFormat::edgelist;
            return load_graph(path, fmt).graph;
        },
        py::arg("path"), py::arg("format") = "auto");

    m.def("solve",
        [](const Graph& g, double cutoff, std::uint64_t seed, double alpha,
            double lambda, double exactlb_budget, int size_upper,
            double clique_budget, bool deterministic, double tick) {
            return solve(g,
                config_from_kwargs(cutoff, seed, alpha, lambda, exactlb_budget,
                    size_upper, clique_budget, deterministic, tick));
        },
        py::arg("graph"), py::arg("cutoff") = 60.0, py::arg("seed") = 1,
        py::arg("alpha") = 0.2, py::arg("lam") = 0.7,
        py::arg("exactlb_budget") = 1.0, py::arg("size_upper") = 1000,
        py::arg("clique_budget") = 0.05, py::arg("deterministic") = false,
        py::arg("tick") = 1e-3);

    m.def("verify_coloring",
        [](const Graph& g, const std::vector<int>& colors) {
            Coloring c{colors, 0};
            c.recount();
            auto r = verify_coloring(g, c);
            return py::make_tuple(r.ok, r.u, r.v);
        },
        py::arg("graph"), py::arg("colors"),
        "returns (ok, u, v); (u, v) is the first violated edge if any");

    m.def("brute_force_chromatic", &brute_force_chromatic, py::arg("graph"),
        "exact chromatic number; guarded to n <= 16");

    m.def("core_numbers",
        [](const Graph& g) { return core_decompose(g).shell; },
        py::arg("graph"), "k-core shell number per vertex");

    m.def("max_clique",
        [](const Graph& g, double budget) {
            TickClock clock(1e-3);
            auto r = max_clique_exact(g, 1, Deadline::after(clock, budget));
            return py::make_tuple(r.clique.vertices, r.exact);
        },
        py::arg("graph"), py::arg("budget") = 10.0,
        "returns (vertices, exact)");
}
