#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfu/constructions.hpp"
#include "pfu/criteria.hpp"
#include "pfu/harness.hpp"
#include "pfu/io.hpp"
#include "pfu/matching.hpp"
#include "pfu/parameters.hpp"
#include "pfu/path_factor.hpp"
#include "pfu/sun.hpp"

namespace py = pybind11;
using namespace pfu;

namespace {

using Pair = std::pair<int, int>;

std::optional<EdgeRef> to_edge(const std::optional<Pair>& p)
{
    if (!p) return std::nullopt;
    return EdgeRef(p->first, p->second);
}

std::optional<Pair> from_edge(const std::optional<EdgeRef>& e)
{
    if (!e) return std::nullopt;
    return Pair{e->u, e->v};
}

std::vector<int> members(VertexSet s)
{
    return s.to_vector();
}

VertexSet to_set(const std::vector<int>& xs)
{
    VertexSet s;
    for (int v : xs) {
        if (v < 0 || v >= max_order) throw GraphError("vertex " + std::to_string(v) + " out of range");
        s.insert(v);
    }
    return s;
}

py::dict verdict(const CriterionVerdict& v)
{
    py::dict d;
    d["holds"] = v.holds;
    d["witness_x"] = v.witness_x ? py::cast(members(*v.witness_x)) : py::none();
    d["sun_count"] = v.sun_count;
    d["bound"] = v.bound;
    d["epsilon"] = v.epsilon;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "P>=3-factor existence, coveredness and uniformity";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);
    py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_AssertionError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Pair>& edges) { return Graph::from_edges(n, edges); }),
             py::arg("n"), py::arg("edges") = std::vector<Pair>{})
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def("graph6", [](const Graph& g) { return to_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("edges", [](const Graph& g) {
            std::vector<Pair> out;
            for (auto e : g.edges()) out.emplace_back(e.u, e.v);
            return out;
        })
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

    m.def("complete_graph", &complete_graph);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("copies", &copies);
    m.def("join", &join);
    m.def("disjoint_union", &disjoint_union);
    m.def("remark1_graph", &remark1_graph, py::arg("t"));
    m.def("remark2_graph", &remark2_graph, py::arg("k"));
    m.def("delete_edge", [](const Graph& g, Pair e) { return delete_edge(g, EdgeRef(e.first, e.second)); });
    m.def("delete_vertices", [](const Graph& g, const std::vector<int>& x) { return delete_vertices(g, to_set(x)); });
    m.def("components", [](const Graph& g) {
        std::vector<std::vector<int>> out;
        for (auto c : components(g)) out.push_back(members(c));
        return out;
    });

    m.def("maximum_matching", [](const Graph& g) {
        std::vector<Pair> out;
        for (auto e : maximum_matching(g).edges) out.emplace_back(e.u, e.v);
        return out;
    });
    m.def("has_perfect_matching", [](const Graph& g) { return has_perfect_matching(g); });
    m.def("is_factor_critical", [](const Graph& g) { return is_factor_critical(g); });

    m.def("sun_kind", [](const Graph& g) { return std::string(to_string(is_sun(g).kind)); });
    m.def("sun_count", [](const Graph& g) { return sun_components(g).count; });
    m.def("epsilon", [](const Graph& g, const std::vector<int>& x) { return epsilon(g, to_set(x)); });

    m.def(
        "find_p3_factor",
        [](const Graph& g, std::optional<Pair> require, std::optional<Pair> forbid, std::uint64_t budget)
            -> std::optional<std::vector<std::vector<int>>> {
            FactorQuery q;
            q.require = to_edge(require);
            q.forbid = to_edge(forbid);
            q.node_budget = budget;
            auto f = find_p3_factor(g, q);
            if (!f) return std::nullopt;
            return f->paths;
        },
        py::arg("g"), py::arg("require") = py::none(), py::arg("forbid") = py::none(), py::arg("budget") = 0);

    m.def("kaneko_check", [](const Graph& g) { return verdict(kaneko_check(g)); });
    m.def("covered_check_criterion", [](const Graph& g) { return verdict(covered_check_criterion(g)); });
    m.def(
        "covered_check_bruteforce",
        [](const Graph& g, std::uint64_t budget) {
            auto r = covered_check_bruteforce(g, budget);
            py::dict d;
            d["covered"] = r.covered;
            d["uncovered_edge"] = from_edge(r.uncovered_edge);
            d["edgeless"] = r.edgeless;
            return d;
        },
        py::arg("g"), py::arg("budget") = 0);
    m.def(
        "is_uniform",
        [](const Graph& g, std::uint64_t budget) {
            auto r = is_uniform(g, budget);
            py::dict d;
            d["uniform"] = r.uniform;
            d["witness_edge"] = from_edge(r.witness_edge);
            return d;
        },
        py::arg("g"), py::arg("budget") = 0);

    m.def("min_degree", &min_degree);
    m.def("independence_number", [](const Graph& g) {
        auto r = independence_number(g);
        return std::make_pair(r.alpha, members(r.witness));
    });
    m.def("vertex_connectivity", &vertex_connectivity);
    m.def("edge_connectivity_at_least", &edge_connectivity_at_least);

    // Report-shaped results travel as JSON text; the package decodes them.
    m.def("_check_thm13", [](const Graph& g) { return to_json(check_thm13_hypothesis(g)).dump(); });
    m.def("_check_thm14", [](const Graph& g, int k, const std::string& gamma) {
        return to_json(check_thm14_hypothesis(g, Thm14Params{k, Rational::parse(gamma)})).dump();
    });
    m.def("_analyze", [](const Graph& g, std::uint64_t budget) { return analyze_graph(g, budget).dump(); });
    m.def("_remark1_demo", [](int t) { return remark1_demo(t).to_json().dump(); });
    m.def("_remark2_demo", [](int k, int b) { return remark2_demo(k, b).to_json().dump(); });
}
