#include "preinforce/pdomination.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace preinforce;

TEST_CASE("is_p_dominating examples") {
    CHECK_FALSE(is_p_dominating(cycle_graph(5), 2, VertexSet::of({0, 2})));
    CHECK(is_p_dominating(cycle_graph(5), 2, VertexSet::full(5)));
    CHECK(is_p_dominating(path_graph(7), 2, VertexSet::of({0, 1, 3, 5, 6})));
    CHECK_THROWS_AS(is_p_dominating(path_graph(3), 0, VertexSet{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_p_dominating(path_graph(3), 1, VertexSet::of({5})),
                    std::out_of_range);
}

TEST_CASE("gamma_p golden values") {
    CHECK(gamma_p(path_graph(7), 2).gamma_p == 4);
    CHECK(gamma_p(cycle_graph(5), 2).gamma_p == 3);
    CHECK(gamma_p(path_graph(4), 3).gamma_p == 4);
    CHECK(gamma_p(Graph(6), 2).gamma_p == 6);  // edgeless: every vertex forced
    CHECK(gamma_p(Graph(0), 3).gamma_p == 0);

    // n < p forces everything
    CHECK(gamma_p(path_graph(2), 5).gamma_p == 2);
}

TEST_CASE("gamma_p on the 31-vertex worked example") {
    Graph g = complete_multipartite(PartiteSpec{{2, 2, 10, 17}});
    CHECK(gamma_p(g, 11).gamma_p == 12);
}

TEST_CASE("gamma_p witness is a lexicographically smallest optimum") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = testutil::graph_from_mask(
            n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
        for (int p = 1; p <= 3; ++p) {
            DominationResult res = gamma_p(g, p);
            CHECK(res.gamma_p == testutil::brute_gamma_p(g, p));
            CHECK(res.witness.count() == res.gamma_p);
            CHECK(is_p_dominating(g, p, res.witness));
            auto masks = testutil::brute_min_dominating_masks(g, p);
            VertexSet smallest = VertexSet::from_bits(masks.front());
            for (std::uint32_t m : masks) {
                VertexSet s = VertexSet::from_bits(m);
                if (lex_before(s, smallest)) smallest = s;
            }
            CHECK(res.witness == smallest);
        }
    }
}

TEST_CASE("all_min_p_dominating_sets examples") {
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    auto sets = all_min_p_dominating_sets(k3, 1);
    REQUIRE(sets.size() == 3);
    CHECK(sets[0] == VertexSet::of({0}));
    CHECK(sets[1] == VertexSet::of({1}));
    CHECK(sets[2] == VertexSet::of({2}));

    auto forced = all_min_p_dominating_sets(path_graph(4), 3);
    REQUIRE(forced.size() == 1);
    CHECK(forced[0] == VertexSet::full(4));

    // C_4, p=2: match an exhaustive scan
    auto c4_sets = all_min_p_dominating_sets(cycle_graph(4), 2);
    auto brute = testutil::brute_min_dominating_masks(cycle_graph(4), 2);
    REQUIRE(c4_sets.size() == brute.size());
    for (std::uint32_t m : brute)
        CHECK(std::find(c4_sets.begin(), c4_sets.end(), VertexSet::from_bits(m)) !=
              c4_sets.end());
}

TEST_CASE("all_min sets are exact, duplicate-free and contain the forced set") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        Graph g = testutil::graph_from_mask(
            n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
        for (int p = 1; p <= 3; ++p) {
            VertexSet forced;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) <= p - 1) forced.add(v);
            auto sets = all_min_p_dominating_sets(g, p);
            auto brute = testutil::brute_min_dominating_masks(g, p);
            REQUIRE(sets.size() == brute.size());
            for (std::size_t i = 0; i < sets.size(); ++i) {
                CHECK(sets[i] == VertexSet::from_bits(brute[i]));  // same lexicographic order
                CHECK((sets[i].bits() & forced.bits()) == forced.bits());
            }
        }
    }
}

TEST_CASE("eta_vertex examples") {
    Graph p5 = path_graph(5);
    CHECK(eta_vertex(p5, 2, 0, VertexSet::of({1, 3})) == 1);
    CHECK(eta_vertex(p5, 2, 1, VertexSet::of({1, 3})) == 0);  // member of X

    Graph k5(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
    CHECK(eta_vertex(k5, 2, 4, VertexSet::of({0, 1})) == 0);
}

TEST_CASE("eta_set examples") {
    Graph p5 = path_graph(5);
    CHECK(eta_set(p5, 2, VertexSet{}, VertexSet::of({1, 3})) == 0);
    CHECK(eta_set(p5, 2, VertexSet::full(5), VertexSet::of({1, 3})) == 2);
    // {0,1,3,4} 2-dominates P_5, so the total deficiency vanishes
    CHECK(eta_set(p5, 2, VertexSet::full(5), VertexSet::of({0, 1, 3, 4})) == 0);
}

TEST_CASE("eta properties on random graphs") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = testutil::graph_from_mask(
            n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
        int p = 1 + static_cast<int>(rng() % 3);
        std::uint64_t range = (std::uint64_t{1} << n) - 1;
        VertexSet X = VertexSet::from_bits(rng() & range);
        VertexSet S = VertexSet::from_bits(rng() & range);
        VertexSet S_sub = VertexSet::from_bits(S.bits() & rng());

        // monotone in S
        CHECK(eta_set(g, p, S_sub, X) <= eta_set(g, p, S, X));
        // zero total deficiency over V is exactly p-domination
        CHECK((eta_set(g, p, VertexSet::full(n), X) == 0) ==
              is_p_dominating(g, p, X));
        // growing X never hurts
        int v = static_cast<int>(rng() % n);
        VertexSet X_plus = X;
        X_plus.add(v);
        CHECK(eta_set(g, p, VertexSet::full(n), X_plus) <=
              eta_set(g, p, VertexSet::full(n), X));
    }
}

TEST_CASE("gamma_p is antitone under edge addition, dropping at most 1") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        Graph g = testutil::graph_from_mask(
            n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
        for (int p = 1; p <= 2; ++p) {
            int gamma = gamma_p(g, p).gamma_p;
            for (const Edge& e : complement_nonedges(g)) {
                int after = gamma_p(add_edges(g, {e}), p).gamma_p;
                CHECK(after <= gamma);
                CHECK(gamma - after <= 1);
            }
        }
    }
}

TEST_CASE("oracle equivalence on every labeled graph up to 5 vertices") {
    for (int n = 0; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g = testutil::graph_from_mask(n, mask);
            for (int p = 1; p <= 3; ++p)
                CHECK(gamma_p(g, p).gamma_p == testutil::brute_gamma_p(g, p));
        }
    }
}
