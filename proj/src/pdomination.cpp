#include "preinforce/pdomination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace preinforce {

namespace {

void check_p(int p) {
    if (p < 1) throw std::invalid_argument("p must be a positive integer");
}

void check_set_range(const Graph& g, const VertexSet& s, const char* what) {
    int n = g.vertex_count();
    std::uint64_t in_range = n >= 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << n) - 1;
    if (s.bits() & ~in_range)
        throw std::out_of_range(std::string(what) +
                                ": set contains vertices outside the graph");
}

// Enumerates, in lexicographic order, every p-dominating set of size k that
// contains the forced set (all vertices of degree <= p-1). The callback
// returns false to stop the enumeration.
class KSubsetSearch {
public:
    KSubsetSearch(const Graph& g, int p)
        : n_(g.vertex_count()), p_(p), adj_(g.adjacency_bits()), cnt_(n_, 0) {
        for (int v = 0; v < n_; ++v)
            if (g.degree(v) <= p - 1) forced_.add(v);
        for (int v = 0; v < n_; ++v)
            if (!forced_.contains(v)) free_.push_back(v);

        chosen_ = forced_;
        deficiency_ = 0;
        for (int x = 0; x < n_; ++x) {
            cnt_[x] = std::popcount(adj_[x] & forced_.bits());
            if (!forced_.contains(x)) deficiency_ += std::max(0, p_ - cnt_[x]);
        }

        // suffix_top_[i][r] = sum of the r largest static gains among
        // free_[i..]; a vertex joining the set relieves at most p (its own
        // deficiency term) plus deg(v) (one unit per neighbor).
        std::size_t c = free_.size();
        suffix_top_.assign(c + 1, std::vector<long>(c + 1, 0));
        suffix_mask_.assign(c + 1, 0);
        std::vector<int> sorted_gains;
        for (std::size_t i = c; i-- > 0;) {
            int gain = p_ + std::popcount(adj_[free_[i]]);
            sorted_gains.insert(
                std::lower_bound(sorted_gains.begin(), sorted_gains.end(), gain,
                                 std::greater<int>()),
                gain);
            long acc = 0;
            for (std::size_t r = 0; r <= c; ++r) {
                suffix_top_[i][r] = acc;
                if (r < sorted_gains.size()) acc += sorted_gains[r];
            }
            suffix_mask_[i] = suffix_mask_[i + 1] | (std::uint64_t{1} << free_[i]);
        }
    }

    int forced_size() const { return forced_.count(); }

    // Visits all valid sets of size k; returns false if the callback stopped.
    bool enumerate(int k, const std::function<bool(VertexSet)>& emit) {
        int extra = k - forced_.count();
        if (extra < 0 || extra > static_cast<int>(free_.size())) return true;
        emit_ = &emit;
        return descend(0, extra);
    }

private:
    bool descend(std::size_t pos, int r) {
        if (r == 0) {
            if (deficiency_ == 0) return (*emit_)(chosen_);
            // check: no more additions, some vertex skipped later stays deficient
            return true;
        }
        std::size_t c = free_.size();
        if (c - pos < static_cast<std::size_t>(r)) return true;
        if (deficiency_ > suffix_top_[pos][static_cast<std::size_t>(r)]) return true;

        for (std::size_t j = pos; j + static_cast<std::size_t>(r) <= c; ++j) {
            int v = free_[j];
            add(v);
            if (viable(pos, j, r - 1)) {
                if (!descend(j + 1, r - 1)) {
                    drop(v);
                    return false;
                }
            }
            drop(v);
        }
        return true;
    }

    // After choosing free_[j], the skipped candidates free_[pos..j) can never
    // join the set; each must still be reachable to p neighbors among the
    // remaining candidates within the leftover budget.
    bool viable(std::size_t pos, std::size_t j, int r_left) {
        std::uint64_t remaining = suffix_mask_[j + 1];
        for (std::size_t s = pos; s < j; ++s) {
            int x = free_[s];
            int need = p_ - cnt_[x];
            if (need <= 0) continue;
            if (need > r_left) return false;
            if (need > std::popcount(adj_[x] & remaining)) return false;
        }
        return true;
    }

    void add(int v) {
        deficiency_ -= std::max(0, p_ - cnt_[v]);
        chosen_.add(v);
        for (std::uint64_t b = adj_[v]; b != 0; b &= b - 1) {
            int x = std::countr_zero(b);
            if (cnt_[x] < p_ && !chosen_.contains(x)) --deficiency_;
            ++cnt_[x];
        }
    }

    void drop(int v) {
        chosen_.remove(v);
        for (std::uint64_t b = adj_[v]; b != 0; b &= b - 1) {
            int x = std::countr_zero(b);
            --cnt_[x];
            if (cnt_[x] < p_ && !chosen_.contains(x)) ++deficiency_;
        }
        deficiency_ += std::max(0, p_ - cnt_[v]);
    }

    int n_;
    int p_;
    std::vector<std::uint64_t> adj_;
    VertexSet forced_;
    std::vector<int> free_;
    std::vector<int> cnt_;
    int deficiency_;
    VertexSet chosen_;
    std::vector<std::vector<long>> suffix_top_;
    std::vector<std::uint64_t> suffix_mask_;
    const std::function<bool(VertexSet)>* emit_ = nullptr;
};

}  // namespace

bool is_p_dominating(const Graph& g, int p, const VertexSet& s) {
    check_p(p);
    check_set_range(g, s, "is_p_dominating");
    auto adj = g.adjacency_bits();
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (s.contains(x)) continue;
        if (std::popcount(adj[static_cast<std::size_t>(x)] & s.bits()) < p)
            return false;
    }
    return true;
}

DominationResult gamma_p(const Graph& g, int p) {
    check_p(p);
    int n = g.vertex_count();
    if (n == 0) return {0, VertexSet{}};
    KSubsetSearch search(g, p);
    int lo = std::max(search.forced_size(), std::min(p, n));
    for (int k = lo; k <= n; ++k) {
        VertexSet found;
        bool hit = false;
        search.enumerate(k, [&](VertexSet s) {
            found = s;
            hit = true;
            return false;  // lexicographically first == smallest
        });
        if (hit) return {k, found};
    }
    // unreachable: V(G) always p-dominates vacuously
    throw std::logic_error("gamma_p: search exhausted without a witness");
}

bool has_p_dominating_set_of_size(const Graph& g, int p, int k) {
    check_p(p);
    if (k < 0 || k > g.vertex_count()) return false;
    if (g.vertex_count() == 0) return k == 0;
    KSubsetSearch search(g, p);
    bool hit = false;
    search.enumerate(k, [&](VertexSet) {
        hit = true;
        return false;
    });
    return hit;
}

std::vector<VertexSet> all_min_p_dominating_sets(const Graph& g, int p) {
    check_p(p);
    if (g.vertex_count() == 0) return {VertexSet{}};
    DominationResult res = gamma_p(g, p);
    std::vector<VertexSet> out;
    KSubsetSearch search(g, p);
    search.enumerate(res.gamma_p, [&](VertexSet s) {
        out.push_back(s);
        return true;
    });
    return out;
}

int eta_vertex(const Graph& g, int p, int x, const VertexSet& X) {
    check_p(p);
    g.check_vertex(x);
    check_set_range(g, X, "eta_vertex");
    if (X.contains(x)) return 0;
    auto adj = g.adjacency_bits();
    int have = std::popcount(adj[static_cast<std::size_t>(x)] & X.bits());
    return have < p ? p - have : 0;
}

int eta_set(const Graph& g, int p, const VertexSet& S, const VertexSet& X) {
    check_p(p);
    check_set_range(g, S, "eta_set");
    check_set_range(g, X, "eta_set");
    auto adj = g.adjacency_bits();
    int total = 0;
    for (std::uint64_t b = S.bits() & ~X.bits(); b != 0; b &= b - 1) {
        int x = std::countr_zero(b);
        int have = std::popcount(adj[static_cast<std::size_t>(x)] & X.bits());
        if (have < p) total += p - have;
    }
    return total;
}

}  // namespace preinforce
