#pragma once

#include "preinforce/graph.hpp"

#include <optional>
#include <vector>

namespace preinforce {

// Closed forms for paths and cycles, p >= 2 (the p = 1 domination numbers
// have no closed form here; use the exact solver).
int gamma_p_path(int n, int p);   // floor(n/2)+1 for p=2, n for p>=3
int gamma_p_cycle(int n, int p);  // ceil(n/2) for p=2, n for p>=3

// p-reinforcement closed forms; require gamma_p(family) > p and throw
// std::domain_error ("not applicable") otherwise -- the r_p = 0 convention
// is the caller's concern.
int r_p_path(int n, int p);
int r_p_cycle(int n, int p);
bool r_p_path_applicable(int n, int p);
bool r_p_cycle_applicable(int n, int p);

// Classical reinforcement of paths and cycles: i where n = 3k+i >= 4,
// i in {1,2,3}.
int r_1_path_cycle(int n);

// Exact gamma_p of a complete t-partite graph via per-part take counts:
// choosing s_i vertices from part i p-dominates iff for every part with
// s_i < n_i the rest of the set has size >= p; minimize the total.
int gamma_p_multipartite(const PartiteSpec& spec, int p);

// Subset of part positions (0-based indices into spec.parts, so repeated
// part sizes stay distinct).
struct IndexSubset {
    std::vector<int> indices;  // ascending
};

// f(X): sum of the selected part sizes (0 for the empty subset).
int part_sum(const PartiteSpec& spec, const IndexSubset& x);

// All position subsets with f(X) >= gamma_p, in increasing bitmask order.
std::vector<IndexSubset> script_X(const PartiteSpec& spec, int p);

// max f(Y) over subsets Y of X with |Y| = |X|-1 and f(Y) < p; nullopt when
// no such Y exists. The singleton case yields 0 via Y = empty set.
std::optional<int> f_star(const PartiteSpec& spec, int p, const IndexSubset& x);

// min over X in script_X of (p - f*(X)) * (f(X) - gamma_p + 1), skipping X
// with undefined f*. Requires gamma_p > p (std::domain_error otherwise).
int r_p_multipartite(const PartiteSpec& spec, int p);

struct MultipartiteFormulaResult {
    int gamma_p = 0;
    int r_p = 0;
    IndexSubset minimizer;                 // first minimizing X in bitmask order
    std::vector<int> minimizer_multiset;   // its part sizes, ascending
};
MultipartiteFormulaResult r_p_multipartite_detail(const PartiteSpec& spec, int p);

}  // namespace preinforce
