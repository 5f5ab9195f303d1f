#pragma once

#include "preinforce/graph.hpp"

#include <vector>

namespace preinforce {

struct DominationResult {
    int gamma_p = 0;
    VertexSet witness;  // lexicographically smallest gamma_p-set
};

// True iff every vertex outside s has at least p neighbors inside s.
bool is_p_dominating(const Graph& g, int p, const VertexSet& s);

// Exact p-domination number with a witness. The search iterates the target
// size upward from max(|forced|, min(p, n)), where forced = all vertices of
// degree <= p-1 (they belong to every p-dominating set), and enumerates only
// supersets of the forced set in lexicographic order with a deficiency-count
// branch-and-bound.
DominationResult gamma_p(const Graph& g, int p);

// Whether some p-dominating set of size exactly k exists. Any p-dominating
// set stays p-dominating under vertex additions, so this is monotone in k.
bool has_p_dominating_set_of_size(const Graph& g, int p, int k);

// All p-dominating sets of minimum size, in lexicographic order, no
// duplicates.
std::vector<VertexSet> all_min_p_dominating_sets(const Graph& g, int p);

// Deficiency of x against X: p - |N(x) cap X| when x is outside X with
// fewer than p neighbors in X, else 0.
int eta_vertex(const Graph& g, int p, int x, const VertexSet& X);

// Sum of eta_vertex over S.
int eta_set(const Graph& g, int p, const VertexSet& S, const VertexSet& X);

}  // namespace preinforce
