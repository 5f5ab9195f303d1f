#include "preinforce/closed_forms.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace preinforce {

namespace {

void check_path_args(int n, int p) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    if (p < 2)
        throw std::invalid_argument(
            "closed forms cover p >= 2 only; use the exact solver for p = 1");
}

void check_cycle_args(int n, int p) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    if (p < 2)
        throw std::invalid_argument(
            "closed forms cover p >= 2 only; use the exact solver for p = 1");
}

void check_spec(const PartiteSpec& spec) {
    if (spec.parts.size() < 2)
        throw std::invalid_argument("complete t-partite graph needs t >= 2");
    for (int s : spec.parts)
        if (s < 1) throw std::invalid_argument("part sizes must be >= 1");
}

}  // namespace

int gamma_p_path(int n, int p) {
    check_path_args(n, p);
    return p == 2 ? n / 2 + 1 : n;
}

int gamma_p_cycle(int n, int p) {
    check_cycle_args(n, p);
    return p == 2 ? (n + 1) / 2 : n;
}

bool r_p_path_applicable(int n, int p) {
    return gamma_p_path(n, p) > p;
}

bool r_p_cycle_applicable(int n, int p) {
    return gamma_p_cycle(n, p) > p;
}

int r_p_path(int n, int p) {
    if (!r_p_path_applicable(n, p))
        throw std::domain_error("r_p_path not applicable: gamma_p(P_n) <= p");
    if (p >= 3) return p - 2;
    return n % 2 == 1 ? 2 : 1;
}

int r_p_cycle(int n, int p) {
    if (!r_p_cycle_applicable(n, p))
        throw std::domain_error("r_p_cycle not applicable: gamma_p(C_n) <= p");
    if (p >= 3) return p - 2;
    return n % 2 == 1 ? 2 : 4;
}

int r_1_path_cycle(int n) {
    if (n < 4) throw std::invalid_argument("r_1_path_cycle needs n >= 4");
    int i = n % 3;
    return i == 0 ? 3 : i;
}

int gamma_p_multipartite(const PartiteSpec& spec, int p) {
    check_spec(spec);
    if (p < 1) throw std::invalid_argument("p must be a positive integer");
    int total = spec.total();
    constexpr long kInf = std::numeric_limits<long>::max() / 2;
    // feasible(T): some choice F of fully-taken parts plus partial takes
    // s_i <= min(n_i - 1, T - p) sums to exactly T. Subset-sum DP over the
    // filled amount, minimizing the partial capacity forfeited by F.
    for (int target = 0; target < total; ++target) {
        int partial_cap = target - p;  // partially-taken part forces T - s_i >= p
        if (partial_cap < 0) continue;
        std::vector<long> forfeit(static_cast<std::size_t>(target) + 1, kInf);
        forfeit[0] = 0;
        long total_slack = 0;
        for (int size : spec.parts) {
            long cap = std::min<long>(size - 1, partial_cap);
            total_slack += cap;
            for (int s = target; s >= size; --s)
                forfeit[static_cast<std::size_t>(s)] =
                    std::min(forfeit[static_cast<std::size_t>(s)],
                             forfeit[static_cast<std::size_t>(s - size)] + cap);
        }
        for (int filled = 0; filled <= target; ++filled) {
            long slack = total_slack - forfeit[static_cast<std::size_t>(filled)];
            if (forfeit[static_cast<std::size_t>(filled)] < kInf &&
                target <= filled + slack)
                return target;
        }
    }
    return total;  // taking everything always p-dominates
}

int part_sum(const PartiteSpec& spec, const IndexSubset& x) {
    int sum = 0;
    for (int i : x.indices) {
        if (i < 0 || i >= static_cast<int>(spec.parts.size()))
            throw std::out_of_range("IndexSubset: position out of range");
        sum += spec.parts[static_cast<std::size_t>(i)];
    }
    return sum;
}

std::vector<IndexSubset> script_X(const PartiteSpec& spec, int p) {
    check_spec(spec);
    int t = static_cast<int>(spec.parts.size());
    if (t > 20)
        throw std::invalid_argument("script_X: refusing to enumerate 2^t subsets for t > 20");
    int gamma = gamma_p_multipartite(spec, p);
    std::vector<IndexSubset> out;
    for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
        int f = 0;
        for (int i = 0; i < t; ++i)
            if ((mask >> i) & 1u) f += spec.parts[static_cast<std::size_t>(i)];
        if (f < gamma) continue;
        IndexSubset x;
        for (int i = 0; i < t; ++i)
            if ((mask >> i) & 1u) x.indices.push_back(i);
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<int> f_star(const PartiteSpec& spec, int p, const IndexSubset& x) {
    check_spec(spec);
    if (p < 1) throw std::invalid_argument("p must be a positive integer");
    if (x.indices.empty()) return std::nullopt;  // no Y with |Y| = -1
    // dropping one position yields every Y with |Y| = |X|-1; for a singleton
    // this is Y = the empty set with f = 0 < p
    int f_all = part_sum(spec, x);
    std::optional<int> best;
    for (std::size_t drop = 0; drop < x.indices.size(); ++drop) {
        int f = f_all - spec.parts[static_cast<std::size_t>(x.indices[drop])];
        if (f < p && (!best || f > *best)) best = f;
    }
    return best;
}

MultipartiteFormulaResult r_p_multipartite_detail(const PartiteSpec& spec, int p) {
    check_spec(spec);
    int gamma = gamma_p_multipartite(spec, p);
    if (gamma <= p)
        throw std::domain_error(
            "r_p_multipartite not applicable: gamma_p <= p (convention r_p = 0)");
    long best = std::numeric_limits<long>::max();
    IndexSubset best_x;
    for (const IndexSubset& x : script_X(spec, p)) {
        std::optional<int> fs = f_star(spec, p, x);
        if (!fs) continue;  // contributes no term
        long term = static_cast<long>(p - *fs) *
                    static_cast<long>(part_sum(spec, x) - gamma + 1);
        if (term < best) {
            best = term;
            best_x = x;
        }
    }
    if (best == std::numeric_limits<long>::max())
        throw std::logic_error(
            "r_p_multipartite: every X in script_X has undefined f*");
    MultipartiteFormulaResult out;
    out.gamma_p = gamma;
    out.r_p = static_cast<int>(best);
    out.minimizer = best_x;
    for (int i : best_x.indices)
        out.minimizer_multiset.push_back(spec.parts[static_cast<std::size_t>(i)]);
    std::sort(out.minimizer_multiset.begin(), out.minimizer_multiset.end());
    return out;
}

int r_p_multipartite(const PartiteSpec& spec, int p) {
    return r_p_multipartite_detail(spec, p).r_p;
}

}  // namespace preinforce
