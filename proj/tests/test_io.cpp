#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "tracesim/io.hpp"

using namespace tracesim;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::MessageMatches;

TEST_CASE("edge list round trip preserves the graph", "[io]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = th::random_connected_graph(rng, 20, 0.15);
        std::stringstream ss;
        write_edge_list(g, ss);
        const Graph back = read_edge_list(ss);
        REQUIRE(back.vertex_count() == g.vertex_count());
        REQUIRE(back.edges() == g.edges());
    }
}

TEST_CASE("written form is canonical and stable", "[io]") {
    const Graph g = th::make_graph(4, {{3, 2}, {1, 0}, {2, 0}});
    std::stringstream ss;
    write_edge_list(g, ss);
    REQUIRE(ss.str() == "# n=4 m=3\n0 1\n0 2\n2 3\n");

    // Writing twice gives identical bytes.
    std::stringstream again;
    write_edge_list(g, again);
    REQUIRE(again.str() == ss.str());
}

TEST_CASE("reader accepts endpoints in either order and blank lines", "[io]") {
    std::stringstream ss("# n=3 m=2\n\n2 0\n1 0\n");
    const Graph g = read_edge_list(ss);
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.has_edge(0, 2));
    REQUIRE(g.has_edge(0, 1));
}

TEST_CASE("reader rejects malformed input with the offending line", "[io]") {
    auto read = [](const std::string& text) {
        std::stringstream ss(text);
        return read_edge_list(ss);
    };
    REQUIRE_THROWS_MATCHES(read(""), std::invalid_argument,
                           MessageMatches(ContainsSubstring("missing header")));
    REQUIRE_THROWS_MATCHES(read("n=3 m=1\n0 1\n"), std::invalid_argument,
                           MessageMatches(ContainsSubstring("malformed header")));
    REQUIRE_THROWS_MATCHES(read("# n=3 m=x\n"), std::invalid_argument,
                           MessageMatches(ContainsSubstring("malformed header")));
    REQUIRE_THROWS_MATCHES(read("# n=3 m=1\n0\n"), std::invalid_argument,
                           MessageMatches(ContainsSubstring("line 2")));
    REQUIRE_THROWS_MATCHES(read("# n=3 m=1\n0 1 2\n"), std::invalid_argument,
                           MessageMatches(ContainsSubstring("trailing tokens")));
    REQUIRE_THROWS_MATCHES(read("# n=3 m=2\n0 1\n"), std::invalid_argument,
                           MessageMatches(ContainsSubstring("header claims m=2")));
    REQUIRE_THROWS_MATCHES(read("# n=3 m=1\n0 -1\n"), std::invalid_argument,
                           MessageMatches(ContainsSubstring("malformed edge")));
    // Structural validation is the Graph constructor's.
    REQUIRE_THROWS_MATCHES(read("# n=3 m=1\n0 7\n"), std::invalid_argument,
                           MessageMatches(ContainsSubstring("out of range")));
    REQUIRE_THROWS_MATCHES(read("# n=3 m=2\n0 1\n1 0\n"), std::invalid_argument,
                           MessageMatches(ContainsSubstring("duplicate")));
}

TEST_CASE("file round trip through a real path", "[io]") {
    const Graph g = th::cycle_graph(9);
    const std::string path = "io_roundtrip_test.edges";
    write_edge_list(g, path);
    const Graph back = read_edge_list(path);
    REQUIRE(back.edges() == g.edges());
    std::remove(path.c_str());
    REQUIRE_THROWS_AS(read_edge_list(path), std::runtime_error);
}
