#pragma once

#include "preinforce/graph.hpp"

#include <optional>

namespace preinforce {

// { y outside X : xy in E(G), |N(y) cap X| = p }. Requires x in X.
VertexSet p_private_neighborhood(const Graph& g, int p, int x, const VertexSet& X);

// |PN_p(x,X,G)| + max(0, p - |N(x) cap X|). Requires x in X.
int mu_p_vertex(const Graph& g, int p, int x, const VertexSet& X);

// min over x in X of mu_p_vertex. X must be nonempty.
int mu_p_set(const Graph& g, int p, const VertexSet& X);

// min over all gamma_p-sets; upper-bounds r_p, with equality when r_p = 1.
int mu_p(const Graph& g, int p);

struct BoundReport {
    int r_p_exact = 0;
    int mu_p = 0;
    std::optional<int> delta_plus_p;        // delta + p, set when delta < p
    int Delta_plus_p = 0;
    std::optional<int> corollary22_value;   // p - Delta, set when Delta < p and gamma_p > p
    bool all_hold = false;
};

// Exact r_p against every applicable bound. all_hold collects:
//   r_p <= mu_p, r_p <= Delta + p, (delta < p implies r_p <= delta + p),
//   (Delta < p and gamma_p > p implies r_p = p - Delta),
//   (r_p = 1 implies mu_p = 1).
BoundReport bound_report(const Graph& g, int p);

}  // namespace preinforce
