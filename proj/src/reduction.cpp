#include "preinforce/reduction.hpp"

#include "preinforce/pdomination.hpp"
#include "preinforce/reinforcement.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace preinforce {

bool Cnf3::literal_coverage_ok() const {
    std::vector<bool> pos(static_cast<std::size_t>(num_vars), false);
    std::vector<bool> neg(static_cast<std::size_t>(num_vars), false);
    for (const auto& clause : clauses)
        for (int lit : clause)
            (lit > 0 ? pos : neg)[static_cast<std::size_t>(std::abs(lit)) - 1] = true;
    for (int i = 0; i < num_vars; ++i)
        if (!pos[static_cast<std::size_t>(i)] || !neg[static_cast<std::size_t>(i)])
            return false;
    return true;
}

bool Cnf3::evaluate(const std::vector<bool>& assignment) const {
    if (static_cast<int>(assignment.size()) != num_vars)
        throw std::invalid_argument("evaluate: assignment size differs from num_vars");
    for (const auto& clause : clauses) {
        bool sat = false;
        for (int lit : clause) {
            bool value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
            if ((lit > 0) == value) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

Cnf3 parse_dimacs_cnf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Cnf3 cnf;
    long announced_clauses = -1;
    std::vector<int> current;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank
        if (first == "c") continue;
        if (first == "p") {
            std::string fmt;
            long n, m;
            if (!(ls >> fmt >> n >> m) || fmt != "cnf" || n < 1 || m < 0)
                throw std::runtime_error("dimacs line " + std::to_string(lineno) +
                                         ": malformed 'p cnf n m' header");
            cnf.num_vars = static_cast<int>(n);
            announced_clauses = m;
            continue;
        }
        if (announced_clauses < 0)
            throw std::runtime_error("dimacs: clause data before 'p cnf' header");
        ls.clear();
        ls.str(line);
        long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.size() != 3)
                    throw std::runtime_error(
                        "dimacs: clause ending on line " + std::to_string(lineno) +
                        " has " + std::to_string(current.size()) +
                        " literals, need exactly 3");
                std::array<int, 3> clause{current[0], current[1], current[2]};
                std::sort(clause.begin(), clause.end());
                if (clause[0] == clause[1] || clause[1] == clause[2])
                    throw std::runtime_error("dimacs: repeated literal in clause ending on line " +
                                             std::to_string(lineno));
                cnf.clauses.push_back(clause);
                current.clear();
            } else {
                if (std::abs(lit) > cnf.num_vars)
                    throw std::runtime_error("dimacs line " + std::to_string(lineno) +
                                             ": literal " + std::to_string(lit) +
                                             " out of range");
                current.push_back(static_cast<int>(lit));
            }
        }
    }
    if (!current.empty())
        throw std::runtime_error("dimacs: last clause is missing its 0 terminator");
    if (announced_clauses < 0) throw std::runtime_error("dimacs: missing header");
    if (static_cast<long>(cnf.clauses.size()) != announced_clauses)
        throw std::runtime_error("dimacs: header announced " +
                                 std::to_string(announced_clauses) + " clauses, found " +
                                 std::to_string(cnf.clauses.size()));
    return cnf;
}

GadgetGraph build_gadget(const Cnf3& cnf, int p) {
    if (p < 2) throw std::invalid_argument("build_gadget: needs p >= 2");
    if (cnf.num_vars < 1) throw std::invalid_argument("build_gadget: needs variables");
    GadgetGraph out;
    out.num_vars = cnf.num_vars;
    out.num_clauses = static_cast<int>(cnf.clauses.size());
    out.p = p;
    int n_vertices = cnf.num_vars * (2 * p + 2) + out.num_clauses + p;
    out.graph = Graph(n_vertices);
    out.labels.resize(static_cast<std::size_t>(n_vertices));

    int block = 2 * p + 2;
    for (int i = 0; i < cnf.num_vars; ++i) {
        std::string var = std::to_string(i + 1);
        out.labels[static_cast<std::size_t>(out.u_vertex(i))] = "u_" + var;
        out.labels[static_cast<std::size_t>(out.ubar_vertex(i))] = "ubar_" + var;
        for (int j = 1; j <= p; ++j) {
            out.labels[static_cast<std::size_t>(out.v_vertex(i, j))] =
                "v_" + var + "_" + std::to_string(j);
            out.labels[static_cast<std::size_t>(out.vbar_vertex(i, j))] =
                "vbar_" + var + "_" + std::to_string(j);
        }
        // H_i = K_{2p+2} minus {u_i vbar_{i,j}, ubar_i v_{i,j} : j = 1..p-1};
        // u_i keeps vbar_{i,p} and ubar_i keeps v_{i,p}
        auto deleted = [&](int a, int b) {
            if (a > b) std::swap(a, b);
            if (a > out.ubar_vertex(i)) return false;
            bool from_u = a == out.u_vertex(i);
            for (int j = 1; j <= p - 1; ++j)
                if (b == (from_u ? out.vbar_vertex(i, j) : out.v_vertex(i, j)))
                    return true;
            return false;
        };
        int base = out.u_vertex(i);
        for (int a = base; a < base + block; ++a)
            for (int b = a + 1; b < base + block; ++b)
                if (!deleted(a, b)) out.graph.add_edge(a, b);
    }
    for (int j = 0; j < out.num_clauses; ++j) {
        out.labels[static_cast<std::size_t>(out.clause_vertex(j))] =
            "c_" + std::to_string(j + 1);
        for (int lit : cnf.clauses[static_cast<std::size_t>(j)]) {
            int i = std::abs(lit) - 1;
            out.graph.add_edge(out.clause_vertex(j),
                               lit > 0 ? out.u_vertex(i) : out.ubar_vertex(i));
        }
        for (int k = 0; k < p; ++k)
            out.graph.add_edge(out.clause_vertex(j), out.t_vertex(k));
    }
    for (int k = 0; k < p; ++k) {
        out.labels[static_cast<std::size_t>(out.t_vertex(k))] =
            "t_" + std::to_string(k + 1);
        for (int l = k + 1; l < p; ++l)
            out.graph.add_edge(out.t_vertex(k), out.t_vertex(l));
    }
    return out;
}

std::string serialize_labels(const GadgetGraph& gadget) {
    std::ostringstream out;
    for (std::size_t v = 0; v < gadget.labels.size(); ++v)
        out << v << ' ' << gadget.labels[v] << '\n';
    return out.str();
}

SatResult sat_bruteforce(const Cnf3& cnf) {
    if (cnf.num_vars > 20)
        throw std::invalid_argument("sat_bruteforce: more than 20 variables");
    int n = cnf.num_vars;
    std::vector<bool> assignment(static_cast<std::size_t>(n));
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        for (int i = 0; i < n; ++i)
            assignment[static_cast<std::size_t>(i)] = (bits >> i) & 1u;
        if (cnf.evaluate(assignment)) return {true, assignment};
    }
    return {false, {}};
}

bool verify_reduction(const Cnf3& cnf, int p, int max_gadget_vertices) {
    if (!cnf.literal_coverage_ok())
        throw std::invalid_argument(
            "verify_reduction: instance violates literal coverage; the "
            "equivalence assumes every literal appears in some clause");
    GadgetGraph gadget = build_gadget(cnf, p);
    if (gadget.graph.vertex_count() > max_gadget_vertices)
        throw std::invalid_argument("verify_reduction: gadget has " +
                                    std::to_string(gadget.graph.vertex_count()) +
                                    " vertices, over the guard of " +
                                    std::to_string(max_gadget_vertices));
    bool sat = sat_bruteforce(cnf).satisfiable;
    ReinforcementCertificate cert = r_p(gadget.graph, p);
    return sat == (cert.r_p == 1);
}

std::vector<bool> extract_assignment(const GadgetGraph& gadget, int p,
                                     const VertexSet& d_e) {
    if (p != gadget.p)
        throw std::invalid_argument("extract_assignment: p differs from the gadget's");
    int expected = p * (gadget.num_vars + 1) - 1;  // gamma_p(gadget) - 1
    if (d_e.count() != expected)
        throw std::invalid_argument("extract_assignment: witness has " +
                                    std::to_string(d_e.count()) +
                                    " vertices, expected " + std::to_string(expected));
    for (int j = 0; j < gadget.num_clauses; ++j)
        if (d_e.contains(gadget.clause_vertex(j)))
            throw std::invalid_argument(
                "extract_assignment: witness contains clause vertex c_" +
                std::to_string(j + 1));
    std::vector<bool> assignment(static_cast<std::size_t>(gadget.num_vars));
    for (int i = 0; i < gadget.num_vars; ++i) {
        bool u_in = d_e.contains(gadget.u_vertex(i));
        bool ubar_in = d_e.contains(gadget.ubar_vertex(i));
        if (u_in && ubar_in)
            throw std::invalid_argument(
                "extract_assignment: witness contains both u_" +
                std::to_string(i + 1) + " and its negation vertex");
        assignment[static_cast<std::size_t>(i)] = u_in;
    }
    return assignment;
}

}  // namespace preinforce
