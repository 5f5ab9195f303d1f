#pragma once

#include "preinforce/graph.hpp"

#include <vector>

namespace preinforce {

struct EtaResult {
    int eta_p = 0;
    VertexSet witness_X;  // |witness_X| = gamma_p(G) - 1, lexicographically smallest minimizer
};

struct ReinforcementCertificate {
    int r_p = 0;
    std::vector<Edge> edges_B;  // subset of non-edges, |edges_B| = r_p
    VertexSet witness_X;        // p-dominates G + edges_B
    int gamma_before = 0;
    int gamma_after = 0;
};

// Minimum total deficiency over all X with |X| = gamma_p(G) - 1 (sets of
// smaller size can only do worse). Requires gamma_p(G) > p; throws
// std::invalid_argument in the convention case gamma_p(G) <= p.
// The candidate enumeration is split across threads (deterministic
// reduction); PREINFORCE_THREADS caps the worker count.
EtaResult eta_p(const Graph& g, int p);

// p-reinforcement number with a witness edge set. Total: returns the
// convention certificate (r_p = 0, empty B, a gamma_p-set as witness) when
// gamma_p(G) <= p; otherwise r_p = eta_p and B joins each deficient vertex
// to enough non-neighbor members of the eta_p-set.
ReinforcementCertificate r_p(const Graph& g, int p);

// Direct minimization over non-edge subsets of increasing size: smallest
// |B| <= max_budget with gamma_p(G+B) < gamma_p(G). Requires
// gamma_p(G) > p. Throws std::runtime_error when the budget is exhausted
// (an undersized budget, or a bug in whatever produced it).
int r_p_definition_oracle(const Graph& g, int p, int max_budget);

enum class CertFailure {
    none,
    edge_not_nonedge,
    duplicate_edge,
    size_mismatch,          // |edges_B| != r_p
    gamma_before_mismatch,
    witness_size_mismatch,  // |witness_X| != gamma_after
    witness_not_dominating,
    no_drop,                // gamma_after >= gamma_before with r_p > 0
    convention_mismatch,    // r_p == 0 but gamma_p(G) > p, or stray edges
};
const char* to_string(CertFailure f);

bool validate_certificate(const Graph& g, int p, const ReinforcementCertificate& cert,
                          CertFailure* why = nullptr);

}  // namespace preinforce
