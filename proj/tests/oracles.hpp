#pragma once

// Test-only oracles and generators. These recompute everything from the
// definitions with their own loops so they stay independent of the library's
// bitset search paths.

#include "preinforce/graph.hpp"

#include <cstdint>
#include <queue>
#include <random>
#include <vector>

namespace testutil {

using preinforce::Graph;

inline bool mask_p_dominates(const Graph& g, int p, std::uint32_t mask) {
    int n = g.vertex_count();
    for (int x = 0; x < n; ++x) {
        if ((mask >> x) & 1u) continue;
        int have = 0;
        for (int y : g.neighbors(x))
            if ((mask >> y) & 1u) ++have;
        if (have < p) return false;
    }
    return true;
}

// definition-level gamma_p: scan all 2^n subsets (n <= 20 or so)
inline int brute_gamma_p(const Graph& g, int p) {
    int n = g.vertex_count();
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!mask_p_dominates(g, p, mask)) continue;
        int size = 0;
        for (int v = 0; v < n; ++v) size += (mask >> v) & 1u;
        if (size < best) best = size;
    }
    return best;
}

inline std::vector<std::uint32_t> brute_min_dominating_masks(const Graph& g, int p) {
    int n = g.vertex_count();
    int gamma = brute_gamma_p(g, p);
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = 0;
        for (int v = 0; v < n; ++v) size += (mask >> v) & 1u;
        if (size == gamma && mask_p_dominates(g, p, mask)) out.push_back(mask);
    }
    return out;
}

// eta_p(G) straight from the definition: min total deficiency over every
// X with |X| < gamma_p (not just |X| = gamma_p - 1)
inline int brute_eta_p(const Graph& g, int p) {
    int n = g.vertex_count();
    int gamma = brute_gamma_p(g, p);
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = 0;
        for (int v = 0; v < n; ++v) size += (mask >> v) & 1u;
        if (size >= gamma) continue;
        int total = 0;
        for (int x = 0; x < n; ++x) {
            if ((mask >> x) & 1u) continue;
            int have = 0;
            for (int y : g.neighbors(x))
                if ((mask >> y) & 1u) ++have;
            if (have < p) total += p - have;
        }
        if (best < 0 || total < best) best = total;
    }
    return best;
}

// classical mu(G) for p = 1: private neighborhoods over closed
// neighborhoods, minimized over gamma-sets
inline int classical_mu(const Graph& g) {
    int n = g.vertex_count();
    auto closed = [&](int x) {
        std::uint32_t m = 1u << x;
        for (int y : g.neighbors(x)) m |= 1u << y;
        return m;
    };
    int best = -1;
    for (std::uint32_t x_mask : brute_min_dominating_masks(g, 1)) {
        int set_min = -1;
        for (int x = 0; x < n; ++x) {
            if (!((x_mask >> x) & 1u)) continue;
            std::uint32_t rest = 0;
            for (int z = 0; z < n; ++z)
                if (z != x && ((x_mask >> z) & 1u)) rest |= closed(z);
            std::uint32_t pn = closed(x) & ~rest;
            int size = 0;
            for (int v = 0; v < n; ++v) size += (pn >> v) & 1u;
            if (set_min < 0 || size < set_min) set_min = size;
        }
        if (best < 0 || set_min < best) best = set_min;
    }
    return best;
}

inline Graph graph_from_mask(int n, std::uint64_t edge_mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((edge_mask >> bit) & 1u) g.add_edge(u, v);
    return g;
}

inline bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = true;
    int reached = 1;
    while (!todo.empty()) {
        int v = todo.front();
        todo.pop();
        for (int u : g.neighbors(v)) {
            if (seen[static_cast<std::size_t>(u)]) continue;
            seen[static_cast<std::size_t>(u)] = true;
            ++reached;
            todo.push(u);
        }
    }
    return reached == n;
}

inline Graph random_connected_graph(int n, double edge_prob, std::mt19937& rng) {
    std::bernoulli_distribution coin(edge_prob);
    for (;;) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
}

}  // namespace testutil
