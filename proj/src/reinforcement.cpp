#include "preinforce/reinforcement.hpp"

#include "preinforce/pdomination.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace preinforce {

namespace {

void check_p(int p) {
    if (p < 1) throw std::invalid_argument("p must be a positive integer");
}

int worker_count(int jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("PREINFORCE_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    }
    return std::max(1, std::min<int>(static_cast<int>(hw), jobs));
}

// next k-subset mask in increasing numeric order (Gosper)
std::uint64_t next_ksubset(std::uint64_t m) {
    std::uint64_t u = m & (~m + 1);
    std::uint64_t y = m + u;
    return y | (((m ^ y) >> 2) / u);
}

struct EtaBest {
    int value = -1;  // -1 = nothing yet
    std::uint64_t mask = 0;

    void offer(int value_in, std::uint64_t mask_in) {
        if (value < 0 || value_in < value ||
            (value_in == value && lex_before(VertexSet::from_bits(mask_in),
                                             VertexSet::from_bits(mask)))) {
            value = value_in;
            mask = mask_in;
        }
    }
};

int eta_of(const std::vector<std::uint64_t>& adj, int n, int p, std::uint64_t X,
           int cutoff) {
    int total = 0;
    for (int x = 0; x < n; ++x) {
        if ((X >> x) & 1u) continue;
        int have = std::popcount(adj[static_cast<std::size_t>(x)] & X);
        if (have < p) {
            total += p - have;
            if (cutoff >= 0 && total > cutoff) return total;
        }
    }
    return total;
}

EtaResult eta_p_impl(const Graph& g, int p, int gamma) {
    int n = g.vertex_count();
    int k = gamma - 1;  // Obs-2.1 size restriction; k >= p >= 1 here
    auto adj = g.adjacency_bits();

    std::atomic<int> next_first{0};
    int last_first = n - k;
    auto run = [&](EtaBest& best) {
        for (;;) {
            int v0 = next_first.fetch_add(1);
            if (v0 > last_first) break;
            std::uint64_t base = std::uint64_t{1} << v0;
            int window = n - 1 - v0;
            if (k == 1) {
                best.offer(eta_of(adj, n, p, base, best.value), base);
                continue;
            }
            std::uint64_t limit = std::uint64_t{1} << window;
            for (std::uint64_t m = (std::uint64_t{1} << (k - 1)) - 1; m < limit;
                 m = next_ksubset(m)) {
                std::uint64_t X = base | (m << (v0 + 1));
                best.offer(eta_of(adj, n, p, X, best.value), X);
            }
        }
    };

    int workers = worker_count(last_first + 1);
    std::vector<EtaBest> bests(static_cast<std::size_t>(workers));
    if (workers == 1) {
        run(bests[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&, t] { run(bests[static_cast<std::size_t>(t)]); });
        for (auto& th : pool) th.join();
    }

    EtaBest best;
    for (const auto& b : bests)
        if (b.value >= 0) best.offer(b.value, b.mask);
    if (best.value < 0) throw std::logic_error("eta_p: empty search space");
    return {best.value, VertexSet::from_bits(best.mask)};
}

}  // namespace

EtaResult eta_p(const Graph& g, int p) {
    check_p(p);
    DominationResult dom = gamma_p(g, p);
    if (dom.gamma_p <= p)
        throw std::invalid_argument(
            "eta_p: gamma_p(G) <= p, r_p is 0 by convention");
    return eta_p_impl(g, p, dom.gamma_p);
}

ReinforcementCertificate r_p(const Graph& g, int p) {
    check_p(p);
    DominationResult dom = gamma_p(g, p);
    if (dom.gamma_p <= p)
        return {0, {}, dom.witness, dom.gamma_p, dom.gamma_p};

    EtaResult eta = eta_p_impl(g, p, dom.gamma_p);
    auto adj = g.adjacency_bits();
    int n = g.vertex_count();
    std::vector<Edge> b;
    b.reserve(static_cast<std::size_t>(eta.eta_p));
    for (int y = 0; y < n; ++y) {
        if (eta.witness_X.contains(y)) continue;
        int have = std::popcount(adj[static_cast<std::size_t>(y)] & eta.witness_X.bits());
        int need = p - have;
        if (need <= 0) continue;
        // |X| = gamma_p - 1 >= p guarantees enough non-neighbors inside X
        std::uint64_t candidates =
            eta.witness_X.bits() & ~adj[static_cast<std::size_t>(y)];
        if (std::popcount(candidates) < need)
            throw std::logic_error("r_p: deficient vertex lacks non-neighbors in X");
        for (int i = 0; i < need; ++i) {
            int x = std::countr_zero(candidates);
            candidates &= candidates - 1;
            b.push_back(Edge(x, y));
        }
    }
    if (static_cast<int>(b.size()) != eta.eta_p)
        throw std::logic_error("r_p: certificate size disagrees with eta_p");
    std::sort(b.begin(), b.end());
    return {eta.eta_p, std::move(b), eta.witness_X, dom.gamma_p, dom.gamma_p - 1};
}

int r_p_definition_oracle(const Graph& g, int p, int max_budget) {
    check_p(p);
    if (max_budget < 1)
        throw std::invalid_argument("r_p_definition_oracle: budget must be >= 1");
    DominationResult dom = gamma_p(g, p);
    if (dom.gamma_p <= p)
        throw std::invalid_argument(
            "r_p_definition_oracle: gamma_p(G) <= p, r_p is 0 by convention");
    int target = dom.gamma_p - 1;
    std::vector<Edge> nonedges = complement_nonedges(g);
    int total = static_cast<int>(nonedges.size());
    for (int s = 1; s <= max_budget && s <= total; ++s) {
        std::vector<int> idx(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            std::vector<Edge> b;
            b.reserve(static_cast<std::size_t>(s));
            for (int i : idx) b.push_back(nonedges[static_cast<std::size_t>(i)]);
            if (has_p_dominating_set_of_size(add_edges(g, b), p, target)) return s;
            int i = s - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == total - s + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw std::runtime_error(
        "r_p_definition_oracle: no gamma_p drop within budget " +
        std::to_string(max_budget));
}

const char* to_string(CertFailure f) {
    switch (f) {
        case CertFailure::none: return "ok";
        case CertFailure::edge_not_nonedge: return "edge of B is not a non-edge of G";
        case CertFailure::duplicate_edge: return "duplicate edge in B";
        case CertFailure::size_mismatch: return "|B| differs from r_p";
        case CertFailure::gamma_before_mismatch: return "gamma_before differs from gamma_p(G)";
        case CertFailure::witness_size_mismatch: return "|X| differs from gamma_after";
        case CertFailure::witness_not_dominating: return "X does not p-dominate G+B";
        case CertFailure::no_drop: return "gamma_after is not below gamma_before";
        case CertFailure::convention_mismatch: return "convention certificate inconsistent";
    }
    return "unknown";
}

bool validate_certificate(const Graph& g, int p, const ReinforcementCertificate& cert,
                          CertFailure* why) {
    check_p(p);
    auto fail = [&](CertFailure f) {
        if (why) *why = f;
        return false;
    };
    if (why) *why = CertFailure::none;

    int n = g.vertex_count();
    for (const Edge& e : cert.edges_B) {
        if (e.u < 0 || e.v >= n || e.u >= e.v)
            return fail(CertFailure::edge_not_nonedge);
        if (g.has_edge(e.u, e.v)) return fail(CertFailure::edge_not_nonedge);
    }
    std::vector<Edge> sorted = cert.edges_B;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return fail(CertFailure::duplicate_edge);
    if (cert.r_p < 0 || static_cast<int>(cert.edges_B.size()) != cert.r_p)
        return fail(CertFailure::size_mismatch);

    DominationResult dom = gamma_p(g, p);
    if (dom.gamma_p != cert.gamma_before)
        return fail(CertFailure::gamma_before_mismatch);

    if (cert.r_p == 0) {
        if (cert.gamma_before > p || cert.gamma_after != cert.gamma_before)
            return fail(CertFailure::convention_mismatch);
        if (cert.witness_X.count() != cert.gamma_after)
            return fail(CertFailure::witness_size_mismatch);
        if (!is_p_dominating(g, p, cert.witness_X))
            return fail(CertFailure::witness_not_dominating);
        return true;
    }

    if (cert.gamma_after >= cert.gamma_before) return fail(CertFailure::no_drop);
    if (cert.witness_X.count() != cert.gamma_after)
        return fail(CertFailure::witness_size_mismatch);
    if (!is_p_dominating(add_edges(g, cert.edges_B), p, cert.witness_X))
        return fail(CertFailure::witness_not_dominating);
    return true;
}

}  // namespace preinforce
