#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pathchrom/claims.hpp"
#include "pathchrom/constructions.hpp"
#include "pathchrom/dp.hpp"
#include "pathchrom/io.hpp"

namespace py = pybind11;
using namespace pathchrom;

namespace {

VertexSet to_set(const Graph& g, const std::vector<int>& members) {
    VertexSet s(g.order());
    for (int v : members) s.set(v);
    return s;
}

std::vector<VertexSet> to_bags(int order, const std::vector<std::vector<int>>& bags) {
    std::vector<VertexSet> out;
    out.reserve(bags.size());
    for (const auto& bag : bags) {
        VertexSet s(order);
        for (int v : bag) s.set(v);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<int>> from_bags(const std::vector<VertexSet>& bags) {
    std::vector<std::vector<int>> out;
    out.reserve(bags.size());
    for (const VertexSet& b : bags) out.push_back(b.to_vector());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact path-chromatic toolkit: coloring, decompositions, subset DP, graph products";

    py::register_exception<invalid_parameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<invalid_vertex>(m, "InvalidVertex", PyExc_ValueError);
    py::register_exception<invalid_structure>(m, "InvalidStructure", PyExc_ValueError);
    py::register_exception<size_limit_error>(m, "SizeLimitError", PyExc_RuntimeError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph(n, edges);
             }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
        .def("edges", &Graph::edges)
        .def("labels", &Graph::labels)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("make_cycle", &make_cycle, py::arg("n"));
    m.def("make_complete", &make_complete, py::arg("n"));
    m.def("make_edgeless", &make_edgeless, py::arg("n"));
    m.def("closed_neighborhood",
          [](const Graph& g, const std::vector<int>& u) { return closed_neighborhood(g, to_set(g, u)).to_vector(); });
    m.def("induced_subgraph", [](const Graph& g, const std::vector<int>& s) {
        InducedSubgraph sub = induced_subgraph(g, to_set(g, s));
        return py::make_tuple(sub.graph, sub.to_parent);
    });
    m.def("vertex_connectivity", &vertex_connectivity);
    m.def("check_induced_embedding",
          [](const Graph& h, const Graph& g, const std::vector<int>& map) { return check_induced_embedding(h, g, map); });
    m.def("is_triangle_free", &is_triangle_free);
    m.def("is_connected", &is_connected);

    m.def("chromatic_number", &chromatic_number);
    m.def("chromatic_decision", [](const Graph& g, int k) -> py::object {
        auto c = chromatic_decision(g, k);
        if (!c) return py::none();
        return py::cast(c->color);
    });
    m.def("greedy_bound", [](const Graph& g, const std::vector<int>& order) { return greedy_bound(g, order); });

    m.def("path_decomposition_from_enumeration", [](const Graph& g, const Enumeration& sigma) {
        return from_bags(path_decomposition_from_enumeration(g, sigma).bags);
    });
    m.def("enumeration_chromatic_number",
          [](const Graph& g, const Enumeration& sigma) { return enumeration_chromatic_number(g, sigma); });
    m.def("validate_path_decomposition", [](const Graph& g, const std::vector<std::vector<int>>& bags) {
        auto r = validate_path_decomposition(g, PathDecomposition{to_bags(g.order(), bags)});
        return py::make_tuple(r.ok, r.violation);
    });
    m.def("validate_tree_decomposition",
          [](const Graph& g, const std::vector<std::pair<int, int>>& tree_edges,
             const std::vector<std::vector<int>>& bags) {
              auto r = validate_tree_decomposition(g, TreeDecomposition{tree_edges, to_bags(g.order(), bags)});
              return py::make_tuple(r.ok, r.violation);
          });
    m.def("path_decomposition_chromatic_number", [](const Graph& g, const std::vector<std::vector<int>>& bags) {
        return decomposition_chromatic_number(g, PathDecomposition{to_bags(g.order(), bags)});
    });
    m.def("tree_decomposition_chromatic_number",
          [](const Graph& g, const std::vector<std::pair<int, int>>& tree_edges,
             const std::vector<std::vector<int>>& bags) {
              return decomposition_chromatic_number(g, TreeDecomposition{tree_edges, to_bags(g.order(), bags)});
          });
    m.def("enumeration_from_path_decomposition", [](const Graph& g, const std::vector<std::vector<int>>& bags) {
        return enumeration_from_path_decomposition(g, PathDecomposition{to_bags(g.order(), bags)});
    });
    m.def("is_special_enumeration",
          [](const Graph& g, const Enumeration& sigma, int k) { return is_special_enumeration(g, sigma, k); });

    py::class_<DpReport>(m, "DpReport")
        .def_readonly("k", &DpReport::k)
        .def_readonly("feasible", &DpReport::feasible)
        .def_readonly("witness", &DpReport::witness)
        .def_readonly("states_explored", &DpReport::states_explored)
        .def_readonly("bag_cache_hits", &DpReport::bag_cache_hits)
        .def_readonly("elapsed_seconds", &DpReport::elapsed_seconds)
        .def("__repr__", [](const DpReport& r) {
            return "DpReport(k=" + std::to_string(r.k) + ", feasible=" + (r.feasible ? "True" : "False") + ")";
        });

    auto dp_opts = [](int size_limit, bool size_override, bool want_witness) {
        DpOptions o;
        o.size_limit = size_limit;
        o.size_override = size_override;
        o.want_witness = want_witness;
        return o;
    };
    m.def(
        "bag_of_prefix",
        [](const Graph& g, const std::vector<int>& s, int v) { return bag_of_prefix(g, to_set(g, s), v).to_vector(); },
        py::arg("g"), py::arg("prefix"), py::arg("v"));
    m.def(
        "path_chromatic_at_most",
        [dp_opts](const Graph& g, int k, int size_limit, bool size_override, bool want_witness) {
            return path_chromatic_at_most(g, k, dp_opts(size_limit, size_override, want_witness));
        },
        py::arg("g"), py::arg("k"), py::arg("size_limit") = 28, py::arg("size_override") = false,
        py::arg("want_witness") = true);
    m.def(
        "path_chromatic_number",
        [dp_opts](const Graph& g, int size_limit, bool size_override, bool want_witness) {
            return path_chromatic_number(g, dp_opts(size_limit, size_override, want_witness));
        },
        py::arg("g"), py::arg("size_limit") = 28, py::arg("size_override") = false, py::arg("want_witness") = true);
    m.def(
        "exists_special_enumeration",
        [dp_opts](const Graph& g, int size_limit, bool size_override) {
            return exists_special_enumeration(g, dp_opts(size_limit, size_override, true));
        },
        py::arg("g"), py::arg("size_limit") = 28, py::arg("size_override") = false);
    m.def("brute_force_path_chromatic", &brute_force_path_chromatic);

    py::class_<RmLabel>(m, "RmLabel")
        .def_readonly("row", &RmLabel::row)
        .def_readonly("base", &RmLabel::base)
        .def("is_apex", &RmLabel::is_apex)
        .def("__repr__", [](const RmLabel& l) {
            return "(" + std::to_string(l.row) + "," + (l.is_apex() ? "v0" : "v" + std::to_string(l.base + 1)) + ")";
        });

    py::class_<RmGraph>(m, "RmGraph")
        .def_readonly("graph", &RmGraph::graph)
        .def_readonly("rows", &RmGraph::rows)
        .def_readonly("base_order", &RmGraph::base_order)
        .def_property_readonly("order", &RmGraph::order)
        .def("index_of", &RmGraph::index_of, py::arg("row"), py::arg("base"))
        .def("label_of", &RmGraph::label_of);

    m.def("r_product", &r_product, py::arg("g"), py::arg("m"));
    m.def("block", [](const RmGraph& r, const std::vector<int>& rows, const std::vector<int>& bases) {
        return block(r, rows, bases).to_vector();
    });
    m.def("embed_into_block",
          [](const Graph& g, const RmGraph& r, const std::vector<int>& u, const std::vector<int>& rows) {
              return embed_into_block(g, r, to_set(g, u), rows);
          });

    py::class_<MycielskiGraph>(m, "MycielskiGraph")
        .def_readonly("graph", &MycielskiGraph::graph)
        .def_readonly("k", &MycielskiGraph::k)
        .def_readonly("stage", &MycielskiGraph::stage)
        .def_readonly("shadow_of", &MycielskiGraph::shadow_of)
        .def_static("order_of", &MycielskiGraph::order_of);

    m.def("mycielski", &mycielski, py::arg("k"));
    m.def("star_decomposition_rm_cycle", [](int n, int m) {
        StarDecomposition sd = star_decomposition_rm_cycle(n, m);
        return py::make_tuple(sd.rm, sd.decomposition.tree_edges, from_bags(sd.decomposition.bags));
    });
    m.def("mu_enumeration", &mu_enumeration, py::arg("g"), py::arg("sigma"), py::arg("m"));
    m.def("mycielski_embedding", &mycielski_embedding, py::arg("n"), py::arg("m"), py::arg("r"));

    m.def("parse_dimacs", &parse_dimacs);
    m.def("write_dimacs", &write_dimacs);
    m.def("graph_to_json", [](const Graph& g) { return graph_to_json(g).dump(); });
    m.def("graph_from_json", [](const std::string& text) { return graph_from_json(ordered_json::parse(text)); });

    m.def("claim_ids", [] { return claim_ids(); });
    m.def(
        "run_claim",
        [](const std::string& id, const ClaimParams& params) {
            ClaimReport r = run_claim(id, params);
            return py::make_tuple(verdict_name(r.verdict), report_to_json(r).dump());
        },
        py::arg("id"), py::arg("params") = ClaimParams{});
}
