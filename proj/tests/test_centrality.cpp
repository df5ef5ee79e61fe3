#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "tracesim/centrality.hpp"

using namespace tracesim;

TEST_CASE("betweenness on hand-solved shapes", "[centrality]") {
    SECTION("three-vertex path") {
        const BetweennessTable t = brandes_betweenness(th::path_graph(3));
        REQUIRE(t.vertex[0] == Catch::Approx(0.0));
        REQUIRE(t.vertex[1] == Catch::Approx(2.0));
        REQUIRE(t.vertex[2] == Catch::Approx(0.0));
        REQUIRE(t.edge[0] == Catch::Approx(4.0));  // edge (0,1)
        REQUIRE(t.edge[1] == Catch::Approx(4.0));
    }
    SECTION("four-vertex star") {
        const Graph g = th::star_graph(4);
        const BetweennessTable t = brandes_betweenness(g);
        REQUIRE(t.vertex[0] == Catch::Approx(6.0));  // hub carries all 3*2 leaf pairs
        for (Vertex leaf = 1; leaf < 4; ++leaf) REQUIRE(t.vertex[leaf] == Catch::Approx(0.0));
        for (EdgeId e = 0; e < 3; ++e) REQUIRE(t.edge[e] == Catch::Approx(6.0));
    }
    SECTION("four-cycle") {
        const BetweennessTable t = brandes_betweenness(th::cycle_graph(4));
        for (Vertex v = 0; v < 4; ++v) REQUIRE(t.vertex[v] == Catch::Approx(1.0));
        for (EdgeId e = 0; e < 4; ++e) REQUIRE(t.edge[e] == Catch::Approx(4.0));
    }
    SECTION("complete graph has no interior vertices") {
        const BetweennessTable t = brandes_betweenness(th::complete_graph(4));
        for (Vertex v = 0; v < 4; ++v) REQUIRE(t.vertex[v] == Catch::Approx(0.0));
        // Every edge carries exactly its own ordered endpoint pair: the floor.
        for (EdgeId e = 0; e < 6; ++e) REQUIRE(t.edge[e] == Catch::Approx(2.0));
    }
    SECTION("single edge") {
        const BetweennessTable t = brandes_betweenness(th::path_graph(2));
        REQUIRE(t.edge[0] == Catch::Approx(2.0));
        REQUIRE(t.vertex[0] == Catch::Approx(0.0));
    }
}

TEST_CASE("brandes agrees with brute force and with enumeration", "[centrality]") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 5 + static_cast<std::size_t>(rng() % 26);
        const Graph g = th::random_connected_graph(rng, n, 0.15);
        const BetweennessTable fast = brandes_betweenness(g);
        const BetweennessTable slow = brute_force_betweenness(g);
        const th::BruteBetweenness orac = th::enumerate_betweenness(g);
        for (Vertex v = 0; v < n; ++v) {
            REQUIRE(std::abs(fast.vertex[v] - slow.vertex[v]) < 1e-9);
            REQUIRE(std::abs(fast.vertex[v] - orac.vertex[v]) < 1e-9);
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            REQUIRE(std::abs(fast.edge[e] - slow.edge[e]) < 1e-9);
            REQUIRE(std::abs(fast.edge[e] - orac.edge[e]) < 1e-9);
        }
    }
}

TEST_CASE("edge betweenness couples to vertex betweenness through the sum rule",
          "[centrality]") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 10 + static_cast<std::size_t>(rng() % 40);
        const Graph g = th::random_connected_graph(rng, n, 0.1);
        const BetweennessTable t = brandes_betweenness(g);
        for (Vertex v = 0; v < n; ++v) {
            double sum = 0.0;
            for (EdgeId e : g.incident_edge_ids(v)) sum += t.edge[e];
            const double rhs = 2.0 * (t.vertex[v] + static_cast<double>(n) - 1.0);
            REQUIRE(std::abs(sum - rhs) / rhs < 1e-9);
        }
    }
}

TEST_CASE("betweenness bounds and leaf behavior", "[centrality]") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = th::random_tree(rng, 25);
        const BetweennessTable t = brandes_betweenness(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            REQUIRE(t.vertex[v] >= -1e-12);
            if (g.degree(v) == 1) REQUIRE(t.vertex[v] == Catch::Approx(0.0));
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e) REQUIRE(t.edge[e] >= 2.0 - 1e-12);
    }
}

TEST_CASE("betweenness rejects unusable graphs", "[centrality]") {
    REQUIRE_THROWS_AS(brandes_betweenness(Graph(0, {})), std::invalid_argument);
    REQUIRE_THROWS_AS(brandes_betweenness(th::make_graph(4, {{0, 1}, {2, 3}})),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(brute_force_betweenness(th::make_graph(4, {{0, 1}, {2, 3}})),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(brute_force_betweenness(th::path_graph(300)), std::invalid_argument);
}

TEST_CASE("rescaled accessors divide by n", "[centrality]") {
    const Graph g = th::star_graph(4);
    const BetweennessTable t = brandes_betweenness(g);
    REQUIRE(t.n == 4);
    REQUIRE(t.vertex_rescaled(0) == Catch::Approx(6.0 / 4.0));
    REQUIRE(t.edge_rescaled(0) == Catch::Approx(6.0 / 4.0));
}

TEST_CASE("betweenness_by_degree averages the rescaled values per class", "[centrality]") {
    const Graph star = th::star_graph(4);
    const auto by_k = betweenness_by_degree(star, brandes_betweenness(star));
    REQUIRE(by_k.size() == 2);
    REQUIRE(by_k.at(1) == Catch::Approx(0.0));
    REQUIRE(by_k.at(3) == Catch::Approx(1.5));

    const Graph p3 = th::path_graph(3);
    const auto p3_by_k = betweenness_by_degree(p3, brandes_betweenness(p3));
    REQUIRE(p3_by_k.at(2) == Catch::Approx(2.0 / 3.0));

    BetweennessTable wrong;
    wrong.n = 3;
    wrong.vertex.assign(2, 0.0);
    REQUIRE_THROWS_AS(betweenness_by_degree(p3, wrong), std::invalid_argument);
}
