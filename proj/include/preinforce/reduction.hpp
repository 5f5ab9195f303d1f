#pragma once

#include "preinforce/graph.hpp"

#include <array>
#include <string>
#include <vector>

namespace preinforce {

// 3SAT instance. Literals are signed 1-based variable indices (DIMACS
// style); each clause is a set of exactly 3 distinct literals.
struct Cnf3 {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;

    // every literal (both polarities of every variable) used somewhere
    bool literal_coverage_ok() const;
    bool evaluate(const std::vector<bool>& assignment) const;
};

// DIMACS CNF: 'c' comments, "p cnf n m" header, zero-terminated clauses.
// Clauses that are not 3 distinct literals are fatal; a literal-coverage
// violation is not (check literal_coverage_ok on the result).
Cnf3 parse_dimacs_cnf(const std::string& text);

// The reduction graph. Vertex numbering is deterministic: per-variable
// blocks u_i, ubar_i, v_{i,1..p}, vbar_{i,1..p}, then clause vertices, then
// the T clique.
struct GadgetGraph {
    Graph graph;
    std::vector<std::string> labels;  // role per vertex: u_1, ubar_1, v_1_1, ...
    int num_vars = 0;
    int num_clauses = 0;
    int p = 0;

    int u_vertex(int i) const { return i * (2 * p + 2); }
    int ubar_vertex(int i) const { return i * (2 * p + 2) + 1; }
    int v_vertex(int i, int j) const { return i * (2 * p + 2) + 1 + j; }        // j in 1..p
    int vbar_vertex(int i, int j) const { return i * (2 * p + 2) + 1 + p + j; } // j in 1..p
    int clause_vertex(int j) const { return num_vars * (2 * p + 2) + j; }
    int t_vertex(int k) const { return num_vars * (2 * p + 2) + num_clauses + k; }
};

// Builds the gadget for p >= 2: per-variable H_i is K_{2p+2} minus the
// edges u_i--vbar_{i,j} and ubar_i--v_{i,j} for j = 1..p-1; c_j is joined
// to the literal vertices of clause C_j and to all of T; T is a p-clique.
GadgetGraph build_gadget(const Cnf3& cnf, int p);

std::string serialize_labels(const GadgetGraph& gadget);

struct SatResult {
    bool satisfiable = false;
    std::vector<bool> assignment;  // empty when unsatisfiable
};

// Exhaustive truth-table check; num_vars <= 20.
SatResult sat_bruteforce(const Cnf3& cnf);

// Cross-checks the reduction on one instance: satisfiable iff
// r_p(gadget) == 1. Throws when the gadget exceeds max_gadget_vertices
// (the exact solver is exponential) or when literal coverage fails (the
// equivalence assumes it).
bool verify_reduction(const Cnf3& cnf, int p, int max_gadget_vertices = 24);

// Reads a truth assignment off a gamma_p-set D_e of gadget+e:
// t(u_i) = true iff the vertex labeled u_i is in D_e. Rejects witnesses
// that violate the structure of such sets (a clause vertex inside D_e,
// both u_i and ubar_i inside, or wrong size).
std::vector<bool> extract_assignment(const GadgetGraph& gadget, int p,
                                     const VertexSet& d_e);

}  // namespace preinforce
