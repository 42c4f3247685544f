#include <random>

#include "doctest.h"
#include "nclkit/error.hpp"
#include "nclkit/generators.hpp"
#include "nclkit/invariants.hpp"
#include "support/oracles.hpp"

using namespace nclkit;

namespace {

Graph star(int leaves) {
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

}  // namespace

TEST_CASE("clique number") {
    CHECK(clique_number(gen_complete(5)) == 5);
    CHECK(clique_number(gen_cycle(5)) == 2);
    CHECK(clique_number(oracle::petersen()) == 2);
    CHECK(oracle::clique_number(oracle::petersen()) == 2);
    CHECK(clique_number(gen_edgeless(0)) == 0);
    CHECK(clique_number(gen_edgeless(3)) == 1);
    const auto clique = maximum_clique(gen_multipartite(4, 3));
    CHECK(clique.size() == 4);
    CHECK(validate_clique(gen_multipartite(4, 3), clique));
}

TEST_CASE("clique number agrees with brute force") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_graph(3 + trial % 9, 0.2 + 0.6 * (trial % 4) / 3.0, rng);
        const auto clique = maximum_clique(g);
        CHECK(static_cast<int>(clique.size()) == oracle::clique_number(g));
        CHECK(validate_clique(g, clique));
    }
}

TEST_CASE("clique number on a 20-vertex dense graph is fast and exact") {
    const Graph g = gen_random(20, Rational(3, 4), 17);
    CHECK(clique_number(g) == oracle::clique_number(g));
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(gen_cycle(5)) == 3);
    CHECK(chromatic_number(gen_cycle(6)) == 2);
    CHECK(chromatic_number(oracle::petersen()) == 3);
    CHECK(oracle::chromatic_number(oracle::petersen()) == 3);
    CHECK(chromatic_number(gen_edgeless(0)) == 0);
    CHECK(chromatic_number(gen_edgeless(4)) == 1);
    for (int r = 1; r <= 5; ++r) {
        for (int t = 1; t <= 3; ++t) CHECK(chromatic_number(gen_multipartite(r, t)) == r);
    }
}

TEST_CASE("chromatic number agrees with brute force and bounds the clique number") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = oracle::random_graph(2 + trial % 7, 0.15 + 0.7 * (trial % 5) / 4.0, rng);
        const int chi = chromatic_number(g);
        CHECK(chi == oracle::chromatic_number(g));
        CHECK(clique_number(g) <= chi);
    }
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_graph(16, 0.5, rng);
        CHECK(clique_number(g) <= chromatic_number(g));
    }
}

TEST_CASE("density") {
    CHECK(density(gen_complete(4)) == Rational(1));
    CHECK(density(gen_cycle(4)) == Rational(2, 3));
    CHECK(density(gen_multipartite(3, 3)) == Rational(3, 4));
    CHECK(density(gen_edgeless(2)) == Rational(0));
    CHECK_THROWS_AS(density(gen_edgeless(1)), invalid_input);
    CHECK_THROWS_AS(density(gen_edgeless(0)), invalid_input);
}

TEST_CASE("K_{m,n} subgraph containment") {
    CHECK(has_kmn_subgraph(gen_cycle(4), 2, 2));
    CHECK(has_kmn_subgraph(gen_complete(5), 2, 3));
    CHECK_FALSE(has_kmn_subgraph(oracle::path(6), 2, 2));
    CHECK_FALSE(has_kmn_subgraph(star(5), 2, 2));
    CHECK(has_kmn_subgraph(star(5), 1, 5));
    CHECK_FALSE(has_kmn_subgraph(star(5), 1, 6));
    CHECK(has_kmn_subgraph(gen_half_graph(4, true), 2, 3) == oracle::has_kmn(gen_half_graph(4, true), 2, 3));
    CHECK_THROWS_AS(has_kmn_subgraph(gen_cycle(4), 0, 2), invalid_input);
    CHECK_THROWS_AS(has_kmn_subgraph(gen_cycle(30), 1, 1), limit_exceeded);
}

TEST_CASE("K_{m,n} containment agrees with brute force on graphs up to 7 vertices") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = oracle::random_graph(2 + trial % 6, 0.3 + 0.5 * (trial % 3) / 2.0, rng);
        for (int m = 1; m <= 3; ++m) {
            for (int n = 1; m + n <= g.vertex_count() + 1; ++n) {
                CHECK(has_kmn_subgraph(g, m, n) == oracle::has_kmn(g, m, n));
            }
        }
    }
}

TEST_CASE("induced K_r(t)") {
    const auto c4 = induced_multipartite(gen_cycle(4), 2, 2);
    REQUIRE(c4.has_value());
    CHECK(c4->parts == std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}});

    CHECK_FALSE(induced_multipartite(gen_complete(5), 2, 2).has_value());

    const Graph octahedron = gen_multipartite(3, 2);
    const auto w = induced_multipartite(octahedron, 2, 2);
    REQUIRE(w.has_value());
    CHECK(validate_multipartite_witness(octahedron, *w));
    CHECK(oracle::has_induced_multipartite(octahedron, 2, 2));

    CHECK(induced_multipartite(gen_multipartite(4, 3), 4, 3).has_value());
    CHECK_FALSE(induced_multipartite(gen_multipartite(4, 3), 5, 2).has_value());
    CHECK(induced_multipartite(gen_edgeless(3), 1, 3).has_value());
    CHECK_THROWS_AS(induced_multipartite(gen_cycle(4), 2, 0), invalid_input);
}

TEST_CASE("induced K_r(t) agrees with brute force on every graph up to 8 vertices") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_graph(4 + trial % 5, 0.35 + 0.4 * (trial % 3) / 2.0, rng);
        for (auto [r, t] : {std::pair{2, 2}, {3, 2}, {2, 3}, {1, 2}, {4, 2}}) {
            const auto w = induced_multipartite(g, r, t);
            CHECK(w.has_value() == oracle::has_induced_multipartite(g, r, t));
            if (w) CHECK(validate_multipartite_witness(g, *w));
        }
    }
}

TEST_CASE("half graph height") {
    CHECK(half_graph_height(gen_half_graph(3, true), true).height == 3);
    CHECK(half_graph_height(gen_complete(2), false).height == 1);
    CHECK(half_graph_height(gen_cycle(4), false).height == 1);
    CHECK(oracle::half_graph_height(gen_cycle(4), false) == 1);
    CHECK(half_graph_height(gen_edgeless(5), false).height == 0);
    CHECK_FALSE(half_graph_height(gen_edgeless(5), false).witness.has_value());

    for (int n = 1; n <= 6; ++n) {
        const Graph h = gen_half_graph(n, true);
        const auto found = half_graph_height(h, true);
        CHECK(found.height == n);
        REQUIRE(found.witness.has_value());
        CHECK(validate_half_graph_witness(h, *found.witness, true));
        const Graph g = gen_half_graph(n, false);
        CHECK(half_graph_height(g, false).height == n);
        if (n <= 4) CHECK(half_graph_height(g, true).height == oracle::half_graph_height(g, true));
    }
}

TEST_CASE("half graph cap returns min(height, cap)") {
    const Graph h = gen_half_graph(6, true);
    CHECK(half_graph_height(h, true, 3).height == 3);
    CHECK(half_graph_height(h, false, 10).height == 6);
    const auto capped = half_graph_height(h, false, 4);
    REQUIRE(capped.witness.has_value());
    CHECK(validate_half_graph_witness(h, *capped.witness, false));
}

TEST_CASE("half graph height agrees with brute force") {
    std::mt19937 rng(34);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(4 + trial % 5, 0.5, rng);
        for (bool bipartite : {false, true}) {
            const auto found = half_graph_height(g, bipartite);
            CHECK(found.height == oracle::half_graph_height(g, bipartite));
            if (found.witness) CHECK(validate_half_graph_witness(g, *found.witness, bipartite));
        }
    }
}

TEST_CASE("edge stability") {
    CHECK_FALSE(is_edge_stable(gen_half_graph(4, true), 4));
    CHECK(is_edge_stable(gen_half_graph(4, true), 5));
    CHECK(is_edge_stable(gen_complete(4), 2));
    CHECK(oracle::half_graph_height(gen_complete(4), false) == 1);
    for (int n = 2; n <= 10; ++n) CHECK(is_edge_stable(gen_complete(n), 2));
    CHECK(is_edge_stable(gen_edgeless(5), 1));
    CHECK_THROWS_AS(is_edge_stable(gen_edgeless(5), 0), invalid_input);
}

TEST_CASE("detectors refuse graphs above the vertex cap") {
    const Graph g = gen_cycle(30);
    CHECK_THROWS_AS(half_graph_height(g, false), limit_exceeded);
    CHECK_THROWS_AS(induced_multipartite(g, 2, 2), limit_exceeded);
    CHECK(half_graph_height(g, false, std::nullopt, 30).height == 2);
    CHECK_THROWS_AS(clique_number(gen_cycle(65)), limit_exceeded);
}

TEST_CASE("validators reject tampered witnesses") {
    const Graph h = gen_half_graph(3, true);
    HalfGraphWitness w{3, {0, 1, 2}, {3, 4, 5}};
    CHECK(validate_half_graph_witness(h, w, true));
    std::swap(w.b_vertices[0], w.b_vertices[1]);
    CHECK_FALSE(validate_half_graph_witness(h, w, false));
    HalfGraphWitness overlap{1, {0}, {0}};
    CHECK_FALSE(validate_half_graph_witness(h, overlap, false));

    const Graph general = gen_half_graph(3, false);
    const HalfGraphWitness own{3, {0, 1, 2}, {3, 4, 5}};
    CHECK(validate_half_graph_witness(general, own, false));
    CHECK_FALSE(validate_half_graph_witness(general, own, true));

    MultipartiteWitness m{{{0, 2}, {1, 3}}};
    CHECK(validate_multipartite_witness(gen_cycle(4), m));
    MultipartiteWitness bad{{{0, 1}, {2, 3}}};
    CHECK_FALSE(validate_multipartite_witness(gen_cycle(4), bad));
    CHECK_FALSE(validate_clique(gen_cycle(4), {0, 2}));
}
