#include "preinforce/bounds.hpp"

#include "preinforce/pdomination.hpp"
#include "preinforce/reinforcement.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace preinforce {

namespace {

void check_member(const VertexSet& X, int x, const char* what) {
    if (!X.contains(x))
        throw std::invalid_argument(std::string(what) + ": x must belong to X");
}

}  // namespace

VertexSet p_private_neighborhood(const Graph& g, int p, int x, const VertexSet& X) {
    if (p < 1) throw std::invalid_argument("p must be a positive integer");
    g.check_vertex(x);
    check_member(X, x, "p_private_neighborhood");
    auto adj = g.adjacency_bits();
    VertexSet pn;
    for (std::uint64_t b = adj[static_cast<std::size_t>(x)] & ~X.bits(); b != 0;
         b &= b - 1) {
        int y = std::countr_zero(b);
        if (std::popcount(adj[static_cast<std::size_t>(y)] & X.bits()) == p)
            pn.add(y);
    }
    return pn;
}

int mu_p_vertex(const Graph& g, int p, int x, const VertexSet& X) {
    if (p < 1) throw std::invalid_argument("p must be a positive integer");
    g.check_vertex(x);
    check_member(X, x, "mu_p_vertex");
    auto adj = g.adjacency_bits();
    int inside = std::popcount(adj[static_cast<std::size_t>(x)] & X.bits());
    return p_private_neighborhood(g, p, x, X).count() + std::max(0, p - inside);
}

int mu_p_set(const Graph& g, int p, const VertexSet& X) {
    if (X.empty()) throw std::invalid_argument("mu_p_set: X must be nonempty");
    int best = std::numeric_limits<int>::max();
    for (int x : X.to_vector()) best = std::min(best, mu_p_vertex(g, p, x, X));
    return best;
}

int mu_p(const Graph& g, int p) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("mu_p: graph has no vertices");
    int best = std::numeric_limits<int>::max();
    for (const VertexSet& X : all_min_p_dominating_sets(g, p))
        best = std::min(best, mu_p_set(g, p, X));
    return best;
}

BoundReport bound_report(const Graph& g, int p) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("bound_report: graph has no vertices");
    BoundReport rep;
    int gamma = gamma_p(g, p).gamma_p;
    rep.r_p_exact = r_p(g, p).r_p;
    rep.mu_p = mu_p(g, p);
    int delta = g.min_degree();
    int big_delta = g.max_degree();
    rep.Delta_plus_p = big_delta + p;
    if (delta < p) rep.delta_plus_p = delta + p;
    if (big_delta < p && gamma > p) rep.corollary22_value = p - big_delta;

    rep.all_hold = rep.r_p_exact <= rep.mu_p &&
                   rep.r_p_exact <= rep.Delta_plus_p &&
                   (!rep.delta_plus_p || rep.r_p_exact <= *rep.delta_plus_p) &&
                   (!rep.corollary22_value || rep.r_p_exact == *rep.corollary22_value) &&
                   (rep.r_p_exact != 1 || rep.mu_p == 1);
    return rep;
}

}  // namespace preinforce
