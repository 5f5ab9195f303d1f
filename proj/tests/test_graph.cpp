#include "preinforce/graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace preinforce;

TEST_CASE("empty and edgeless graphs") {
    Graph g0(0);
    CHECK(g0.vertex_count() == 0);
    CHECK(g0.edge_count() == 0);

    Graph g3(3);
    for (int v = 0; v < 3; ++v) CHECK(g3.degree(v) == 0);
    CHECK(complement_nonedges(g3).size() == 3);
}

TEST_CASE("complete graph by adding all pairs") {
    Graph g(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
    for (int v = 0; v < 5; ++v) CHECK(g.degree(v) == 4);
    CHECK(complement_nonedges(g).empty());
}

TEST_CASE("add_edge is idempotent and validates input") {
    Graph g(4);
    g.add_edge(1, 2);
    g.add_edge(2, 1);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 2));
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    CHECK_THROWS_AS(g.add_edge(-1, 0), std::out_of_range);
}

TEST_CASE("edge normalizes order and rejects loops") {
    Edge e(5, 2);
    CHECK(e.u == 2);
    CHECK(e.v == 5);
    CHECK_THROWS_AS(Edge(3, 3), std::invalid_argument);
}

TEST_CASE("path and cycle generators") {
    Graph p1 = path_graph(1);
    CHECK(p1.vertex_count() == 1);
    CHECK(p1.edge_count() == 0);

    Graph c5 = cycle_graph(5);
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(c5.has_edge(4, 0));

    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}

TEST_CASE("complete multipartite generator") {
    Graph g = complete_multipartite(PartiteSpec{{2, 2, 10, 17}});
    CHECK(g.vertex_count() == 31);
    CHECK(g.degree(0) == 29);   // part of size 2
    CHECK(g.degree(4) == 21);   // part of size 10
    CHECK(g.degree(30) == 14);  // part of size 17
    CHECK_FALSE(g.has_edge(0, 1));  // same part
    CHECK(g.has_edge(0, 2));

    CHECK_THROWS_AS(complete_multipartite(PartiteSpec{{3}}), std::invalid_argument);
    CHECK_THROWS_AS(complete_multipartite(PartiteSpec{{0, 2}}), std::invalid_argument);
}

TEST_CASE("complement examples") {
    Graph p3 = path_graph(3);
    auto nonedges = complement_nonedges(p3);
    REQUIRE(nonedges.size() == 1);
    CHECK(nonedges[0] == Edge(0, 2));
}

TEST_CASE("add_edges leaves the input alone and rejects present edges") {
    Graph p3 = path_graph(3);
    Graph k3 = add_edges(p3, {Edge(0, 2)});
    CHECK(p3.edge_count() == 2);
    CHECK(k3.edge_count() == 3);
    CHECK_THROWS_AS(add_edges(p3, {Edge(0, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(add_edges(k3, {Edge(0, 2), Edge(0, 2)}), std::invalid_argument);
}

TEST_CASE("handshake and complement properties on random graphs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = testutil::graph_from_mask(
            n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
        long degree_sum = 0;
        for (int v = 0; v < n; ++v) degree_sum += g.degree(v);
        CHECK(degree_sum == 2 * static_cast<long>(g.edge_count()));

        auto nonedges = complement_nonedges(g);
        CHECK(g.edge_count() + nonedges.size() ==
              static_cast<std::size_t>(n) * (n - 1) / 2);

        // complementing twice lands back on the original edge set
        Graph gc(n);
        for (const Edge& e : nonedges) gc.add_edge(e.u, e.v);
        auto back = complement_nonedges(gc);
        CHECK(back == g.edges());

        // filling in every non-edge completes the graph
        Graph full = add_edges(g, nonedges);
        for (int v = 0; v < n; ++v) CHECK(full.degree(v) == n - 1);
    }
}

TEST_CASE("edge list round trip on canonical form") {
    Graph g = cycle_graph(6);
    g.add_edge(0, 3);
    std::string text = serialize_edge_list(g);
    Graph back = parse_edge_list(text);
    CHECK(back.edges() == g.edges());
    CHECK(serialize_edge_list(back) == text);
}

TEST_CASE("edge list accepts comments and blank lines") {
    Graph g = parse_edge_list("# a triangle\n\n3 3\n0 1\n# middle\n1 2\n0 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("edge list rejects malformed input") {
    CHECK_THROWS(parse_edge_list("3 1\n0 1\n0 1\n"));   // duplicate edge
    CHECK_THROWS(parse_edge_list("3 1\n1 1\n"));        // loop
    CHECK_THROWS(parse_edge_list("3 1\n0 3\n"));        // index out of range
    CHECK_THROWS(parse_edge_list("3 1\n0 1 2\n"));      // malformed line
    CHECK_THROWS(parse_edge_list("3 2\n0 1\n"));        // fewer edges than announced
    CHECK_THROWS(parse_edge_list("oops\n"));            // bad header
    CHECK_THROWS(parse_edge_list(""));                  // no header
}

TEST_CASE("vertex set basics and lexicographic order") {
    VertexSet s = VertexSet::of({4, 1, 6});
    CHECK(s.count() == 3);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(0));
    CHECK(s.to_vector() == std::vector<int>{1, 4, 6});

    CHECK(lex_before(VertexSet::of({0, 5}), VertexSet::of({1, 2})));
    CHECK_FALSE(lex_before(VertexSet::of({1, 2}), VertexSet::of({0, 5})));
    CHECK(lex_before(VertexSet::of({0, 3}), VertexSet::of({0, 5})));
    CHECK(lex_before(VertexSet::of({0}), VertexSet::of({0, 5})));  // prefix
    CHECK_FALSE(lex_before(VertexSet::of({0, 5}), VertexSet::of({0})));
    CHECK_FALSE(lex_before(s, s));
}
