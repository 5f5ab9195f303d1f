#include "preinforce/bounds.hpp"
#include "preinforce/closed_forms.hpp"
#include "preinforce/graph.hpp"
#include "preinforce/json_io.hpp"
#include "preinforce/pdomination.hpp"
#include "preinforce/reduction.hpp"
#include "preinforce/reinforcement.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace preinforce;

namespace {

VertexSet to_set(const std::vector<int>& vs) { return VertexSet::from_indices(vs); }

std::vector<std::pair<int, int>> edge_pairs(const std::vector<Edge>& edges) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

std::vector<Edge> to_edges(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (auto [u, v] : pairs) out.push_back(Edge(u, v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_preinforce, m) {
    m.doc() = "exact p-domination and p-reinforcement solvers";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors",
             [](const Graph& g, int v) { return g.neighbors(v); },
             py::arg("v"))
        .def("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
        .def("min_degree", &Graph::min_degree)
        .def("max_degree", &Graph::max_degree)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("path_graph", &path_graph, py::arg("n"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def(
        "complete_multipartite",
        [](const std::vector<int>& parts) {
            return complete_multipartite(PartiteSpec{parts});
        },
        py::arg("parts"));
    m.def("complement_nonedges",
          [](const Graph& g) { return edge_pairs(complement_nonedges(g)); });
    m.def(
        "add_edges",
        [](const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
            return add_edges(g, to_edges(pairs));
        },
        py::arg("g"), py::arg("edges"));
    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("serialize_edge_list", &serialize_edge_list, py::arg("g"));

    py::class_<DominationResult>(m, "DominationResult")
        .def_readonly("gamma_p", &DominationResult::gamma_p)
        .def_property_readonly(
            "witness",
            [](const DominationResult& r) { return r.witness.to_vector(); })
        .def("__repr__", [](const DominationResult& r) {
            return "DominationResult(gamma_p=" + std::to_string(r.gamma_p) + ")";
        });

    m.def(
        "is_p_dominating",
        [](const Graph& g, int p, const std::vector<int>& s) {
            return is_p_dominating(g, p, to_set(s));
        },
        py::arg("g"), py::arg("p"), py::arg("s"));
    m.def("gamma_p", &gamma_p, py::arg("g"), py::arg("p"));
    m.def(
        "all_min_p_dominating_sets",
        [](const Graph& g, int p) {
            std::vector<std::vector<int>> out;
            for (const VertexSet& s : all_min_p_dominating_sets(g, p))
                out.push_back(s.to_vector());
            return out;
        },
        py::arg("g"), py::arg("p"));
    m.def(
        "eta_vertex",
        [](const Graph& g, int p, int x, const std::vector<int>& X) {
            return eta_vertex(g, p, x, to_set(X));
        },
        py::arg("g"), py::arg("p"), py::arg("x"), py::arg("X"));
    m.def(
        "eta_set",
        [](const Graph& g, int p, const std::vector<int>& S, const std::vector<int>& X) {
            return eta_set(g, p, to_set(S), to_set(X));
        },
        py::arg("g"), py::arg("p"), py::arg("S"), py::arg("X"));

    py::class_<EtaResult>(m, "EtaResult")
        .def_readonly("eta_p", &EtaResult::eta_p)
        .def_property_readonly(
            "witness_X",
            [](const EtaResult& r) { return r.witness_X.to_vector(); });

    py::class_<ReinforcementCertificate>(m, "ReinforcementCertificate")
        .def_readonly("r_p", &ReinforcementCertificate::r_p)
        .def_property_readonly(
            "edges_B",
            [](const ReinforcementCertificate& c) { return edge_pairs(c.edges_B); })
        .def_property_readonly(
            "witness_X",
            [](const ReinforcementCertificate& c) { return c.witness_X.to_vector(); })
        .def_readonly("gamma_before", &ReinforcementCertificate::gamma_before)
        .def_readonly("gamma_after", &ReinforcementCertificate::gamma_after)
        .def("to_json", [](const ReinforcementCertificate& c) {
            return certificate_to_json(c);
        })
        .def("__repr__", [](const ReinforcementCertificate& c) {
            return "ReinforcementCertificate(r_p=" + std::to_string(c.r_p) + ")";
        });

    m.def("eta_p", &eta_p, py::arg("g"), py::arg("p"));
    m.def("r_p", &r_p, py::arg("g"), py::arg("p"));
    m.def("r_p_definition_oracle", &r_p_definition_oracle, py::arg("g"), py::arg("p"),
          py::arg("max_budget"));
    m.def("certificate_from_json", &certificate_from_json, py::arg("text"));
    m.def(
        "validate_certificate",
        [](const Graph& g, int p, const ReinforcementCertificate& cert) {
            CertFailure why = CertFailure::none;
            bool ok = validate_certificate(g, p, cert, &why);
            return py::make_tuple(ok, std::string(to_string(why)));
        },
        py::arg("g"), py::arg("p"), py::arg("cert"));

    m.def("gamma_p_path", &gamma_p_path, py::arg("n"), py::arg("p"));
    m.def("gamma_p_cycle", &gamma_p_cycle, py::arg("n"), py::arg("p"));
    m.def("r_p_path", &r_p_path, py::arg("n"), py::arg("p"));
    m.def("r_p_cycle", &r_p_cycle, py::arg("n"), py::arg("p"));
    m.def("r_p_path_applicable", &r_p_path_applicable, py::arg("n"), py::arg("p"));
    m.def("r_p_cycle_applicable", &r_p_cycle_applicable, py::arg("n"), py::arg("p"));
    m.def("r_1_path_cycle", &r_1_path_cycle, py::arg("n"));
    m.def(
        "gamma_p_multipartite",
        [](const std::vector<int>& parts, int p) {
            return gamma_p_multipartite(PartiteSpec{parts}, p);
        },
        py::arg("parts"), py::arg("p"));
    m.def(
        "script_X",
        [](const std::vector<int>& parts, int p) {
            std::vector<std::vector<int>> out;
            for (const IndexSubset& x : script_X(PartiteSpec{parts}, p))
                out.push_back(x.indices);
            return out;
        },
        py::arg("parts"), py::arg("p"));
    m.def(
        "f_star",
        [](const std::vector<int>& parts, int p, const std::vector<int>& indices)
            -> std::optional<int> {
            return f_star(PartiteSpec{parts}, p, IndexSubset{indices});
        },
        py::arg("parts"), py::arg("p"), py::arg("indices"));
    m.def(
        "r_p_multipartite",
        [](const std::vector<int>& parts, int p) {
            return r_p_multipartite(PartiteSpec{parts}, p);
        },
        py::arg("parts"), py::arg("p"));
    m.def(
        "r_p_multipartite_detail",
        [](const std::vector<int>& parts, int p) {
            MultipartiteFormulaResult res =
                r_p_multipartite_detail(PartiteSpec{parts}, p);
            py::dict out;
            out["gamma_p"] = res.gamma_p;
            out["r_p"] = res.r_p;
            out["minimizer_indices"] = res.minimizer.indices;
            out["minimizer_multiset"] = res.minimizer_multiset;
            return out;
        },
        py::arg("parts"), py::arg("p"));

    m.def(
        "p_private_neighborhood",
        [](const Graph& g, int p, int x, const std::vector<int>& X) {
            return p_private_neighborhood(g, p, x, to_set(X)).to_vector();
        },
        py::arg("g"), py::arg("p"), py::arg("x"), py::arg("X"));
    m.def(
        "mu_p_vertex",
        [](const Graph& g, int p, int x, const std::vector<int>& X) {
            return mu_p_vertex(g, p, x, to_set(X));
        },
        py::arg("g"), py::arg("p"), py::arg("x"), py::arg("X"));
    m.def(
        "mu_p_set",
        [](const Graph& g, int p, const std::vector<int>& X) {
            return mu_p_set(g, p, to_set(X));
        },
        py::arg("g"), py::arg("p"), py::arg("X"));
    m.def("mu_p", &mu_p, py::arg("g"), py::arg("p"));

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("r_p_exact", &BoundReport::r_p_exact)
        .def_readonly("mu_p", &BoundReport::mu_p)
        .def_readonly("delta_plus_p", &BoundReport::delta_plus_p)
        .def_readonly("Delta_plus_p", &BoundReport::Delta_plus_p)
        .def_readonly("corollary22_value", &BoundReport::corollary22_value)
        .def_readonly("all_hold", &BoundReport::all_hold);
    m.def("bound_report", &bound_report, py::arg("g"), py::arg("p"));

    py::class_<Cnf3>(m, "Cnf3")
        .def(py::init([](int num_vars, const std::vector<std::array<int, 3>>& clauses) {
                 return Cnf3{num_vars, clauses};
             }),
             py::arg("num_vars"), py::arg("clauses"))
        .def_readonly("num_vars", &Cnf3::num_vars)
        .def_readonly("clauses", &Cnf3::clauses)
        .def("literal_coverage_ok", &Cnf3::literal_coverage_ok)
        .def("evaluate", &Cnf3::evaluate, py::arg("assignment"));
    m.def("parse_dimacs_cnf", &parse_dimacs_cnf, py::arg("text"));

    py::class_<GadgetGraph>(m, "GadgetGraph")
        .def_readonly("graph", &GadgetGraph::graph)
        .def_readonly("labels", &GadgetGraph::labels)
        .def_readonly("num_vars", &GadgetGraph::num_vars)
        .def_readonly("num_clauses", &GadgetGraph::num_clauses)
        .def_readonly("p", &GadgetGraph::p)
        .def("u_vertex", &GadgetGraph::u_vertex, py::arg("i"))
        .def("ubar_vertex", &GadgetGraph::ubar_vertex, py::arg("i"))
        .def("v_vertex", &GadgetGraph::v_vertex, py::arg("i"), py::arg("j"))
        .def("vbar_vertex", &GadgetGraph::vbar_vertex, py::arg("i"), py::arg("j"))
        .def("clause_vertex", &GadgetGraph::clause_vertex, py::arg("j"))
        .def("t_vertex", &GadgetGraph::t_vertex, py::arg("k"));
    m.def("build_gadget", &build_gadget, py::arg("cnf"), py::arg("p"));
    m.def("serialize_labels", &serialize_labels, py::arg("gadget"));
    m.def(
        "sat_bruteforce",
        [](const Cnf3& cnf) {
            SatResult res = sat_bruteforce(cnf);
            return py::make_tuple(res.satisfiable,
                                  res.satisfiable
                                      ? py::object(py::cast(res.assignment))
                                      : py::object(py::none()));
        },
        py::arg("cnf"));
    m.def("verify_reduction", &verify_reduction, py::arg("cnf"), py::arg("p"),
          py::arg("max_gadget_vertices") = 24);
    m.def(
        "extract_assignment",
        [](const GadgetGraph& gadget, int p, const std::vector<int>& d_e) {
            return extract_assignment(gadget, p, to_set(d_e));
        },
        py::arg("gadget"), py::arg("p"), py::arg("d_e"));
}
