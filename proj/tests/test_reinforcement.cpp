#include "preinforce/reinforcement.hpp"

#include "preinforce/json_io.hpp"
#include "preinforce/pdomination.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace preinforce;

TEST_CASE("eta_p golden values") {
    EtaResult p5 = eta_p(path_graph(5), 2);
    CHECK(p5.eta_p == 2);
    CHECK(p5.witness_X == VertexSet::of({1, 3}));

    CHECK(eta_p(cycle_graph(6), 2).eta_p == 4);
    CHECK(eta_p(path_graph(4), 3).eta_p == 1);
}

TEST_CASE("eta_p signals the convention case") {
    // gamma_2(P_3) = 2 = p
    CHECK_THROWS_AS(eta_p(path_graph(3), 2), std::invalid_argument);
}

TEST_CASE("eta_p witness has size gamma_p - 1 and attains the value") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        Graph g = testutil::random_connected_graph(n, 0.45, rng);
        for (int p = 1; p <= 3; ++p) {
            int gamma = gamma_p(g, p).gamma_p;
            if (gamma <= p) continue;
            EtaResult res = eta_p(g, p);
            CHECK(res.witness_X.count() == gamma - 1);
            CHECK(eta_set(g, p, VertexSet::full(n), res.witness_X) == res.eta_p);
            // the |X| = gamma-1 restriction loses nothing against all |X| < gamma
            CHECK(res.eta_p == testutil::brute_eta_p(g, p));
        }
    }
}

TEST_CASE("r_p golden values") {
    CHECK(r_p(cycle_graph(7), 2).r_p == 2);
    CHECK(r_p(path_graph(6), 2).r_p == 1);
    CHECK(r_p(path_graph(4), 1).r_p == 1);  // r(P_4) = 1 since 4 = 3k+1

    Graph worked = complete_multipartite(PartiteSpec{{2, 2, 10, 17}});
    ReinforcementCertificate cert = r_p(worked, 11);
    CHECK(cert.r_p == 1);
    CHECK(validate_certificate(worked, 11, cert));
}

TEST_CASE("r_p convention certificate") {
    Graph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    ReinforcementCertificate cert = r_p(k4, 1);  // gamma_1(K_4) = 1 <= p
    CHECK(cert.r_p == 0);
    CHECK(cert.edges_B.empty());
    CHECK(cert.gamma_before == 1);
    CHECK(cert.gamma_after == 1);
    CHECK(validate_certificate(k4, 1, cert));

    // edgeless graph on n > p vertices: every vertex needs p new edges
    ReinforcementCertificate edgeless = r_p(Graph(4), 2);
    CHECK(edgeless.r_p == 2);
    CHECK(validate_certificate(Graph(4), 2, edgeless));
}

TEST_CASE("definition oracle golden values") {
    CHECK(r_p_definition_oracle(cycle_graph(6), 2, 4) == 4);
    CHECK(r_p_definition_oracle(path_graph(5), 2, 2) == 2);
    CHECK(r_p_definition_oracle(path_graph(6), 2, 1) == 1);
    CHECK_THROWS_AS(r_p_definition_oracle(path_graph(5), 2, 1), std::runtime_error);
    CHECK_THROWS_AS(r_p_definition_oracle(path_graph(3), 2, 1), std::invalid_argument);
}

TEST_CASE("theorem 2.2 equality with certificates on random connected graphs") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);  // up to 7 here; acceptance goes to 8
        Graph g = testutil::random_connected_graph(n, 0.4, rng);
        for (int p = 1; p <= 3; ++p) {
            int gamma = gamma_p(g, p).gamma_p;
            if (gamma <= p) continue;
            ReinforcementCertificate cert = r_p(g, p);
            CHECK(cert.r_p == r_p_definition_oracle(g, p, cert.r_p));
            CHECK(validate_certificate(g, p, cert));
            CHECK(cert.gamma_after == gamma - 1);
            CHECK(cert.witness_X.count() == gamma - 1);
            // a minimum reinforcement set drops gamma_p by exactly one
            CHECK(gamma_p(add_edges(g, cert.edges_B), p).gamma_p == gamma - 1);
        }
    }
}

TEST_CASE("corollary 2.2: sparse graphs reinforce with p - Delta edges") {
    CHECK(r_p(path_graph(4), 3).r_p == 1);  // Delta = 2 < 3
    CHECK(r_p(Graph(3), 2).r_p == 2);       // Delta = 0

    std::mt19937 rng(5150);
    int seen = 0;
    for (int trial = 0; trial < 200 && seen < 12; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        Graph g = testutil::graph_from_mask(
            n, rng() & rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
        int p = 2 + static_cast<int>(rng() % 2);
        if (g.max_degree() >= p) continue;
        if (gamma_p(g, p).gamma_p <= p) continue;
        ++seen;
        CHECK(r_p(g, p).r_p == p - g.max_degree());
    }
    CHECK(seen > 0);
}

TEST_CASE("validate_certificate rejects tampering") {
    Graph g = cycle_graph(6);
    ReinforcementCertificate cert = r_p(g, 2);
    REQUIRE(cert.r_p == 4);
    CertFailure why = CertFailure::none;

    ReinforcementCertificate short_b = cert;
    short_b.edges_B.pop_back();
    CHECK_FALSE(validate_certificate(g, 2, short_b, &why));
    CHECK(why == CertFailure::size_mismatch);

    // drop the edge *and* adjust r_p: the witness no longer dominates
    ReinforcementCertificate undersized = short_b;
    undersized.r_p = 3;
    CHECK_FALSE(validate_certificate(g, 2, undersized, &why));
    CHECK(why == CertFailure::witness_not_dominating);

    ReinforcementCertificate wrong_gamma = cert;
    wrong_gamma.gamma_before = 5;
    CHECK_FALSE(validate_certificate(g, 2, wrong_gamma, &why));
    CHECK(why == CertFailure::gamma_before_mismatch);

    ReinforcementCertificate no_drop = cert;
    no_drop.gamma_after = no_drop.gamma_before;
    CHECK_FALSE(validate_certificate(g, 2, no_drop, &why));
    CHECK(why == CertFailure::no_drop);

    ReinforcementCertificate existing_edge = cert;
    existing_edge.edges_B[0] = Edge(0, 1);
    CHECK_FALSE(validate_certificate(g, 2, existing_edge, &why));
    CHECK(why == CertFailure::edge_not_nonedge);

    ReinforcementCertificate duplicated = cert;
    duplicated.edges_B[1] = duplicated.edges_B[0];
    CHECK_FALSE(validate_certificate(g, 2, duplicated, &why));
    CHECK(why == CertFailure::duplicate_edge);

    ReinforcementCertificate fake_convention = cert;
    fake_convention.r_p = 0;
    fake_convention.edges_B.clear();
    fake_convention.gamma_after = fake_convention.gamma_before;
    CHECK_FALSE(validate_certificate(g, 2, fake_convention, &why));
    CHECK(why == CertFailure::convention_mismatch);
}

TEST_CASE("certificate JSON round trip") {
    Graph g = cycle_graph(7);
    ReinforcementCertificate cert = r_p(g, 2);
    ReinforcementCertificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(back.r_p == cert.r_p);
    CHECK(back.edges_B == cert.edges_B);
    CHECK(back.witness_X == cert.witness_X);
    CHECK(back.gamma_before == cert.gamma_before);
    CHECK(back.gamma_after == cert.gamma_after);
    CHECK(validate_certificate(g, 2, back));
}
