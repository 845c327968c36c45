#include "doctest.h"
#include "oracles.hpp"
#include "tpf/graph.hpp"
#include "tpf/io.hpp"
#include "tpf/rng.hpp"

using namespace tpf;

static Graph random_graph(int n, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (rng.chance(1, 2)) edges.push_back({u, v});
    return Graph(n, edges);
}

TEST_CASE("graph6 encoding matches the independent oracle") {
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(to_graph6(complete_graph(3)) == oracle::graph6(complete_graph(3)));
    CHECK(to_graph6(Graph(1, {})) == "@");
    CHECK(to_graph6(Graph(0, {})) == "?");
    for (int i = 0; i < 40; i++) {
        Graph g = random_graph(3 + i % 10, 1000 + i);
        CHECK(to_graph6(g) == oracle::graph6(g));
    }
}

TEST_CASE("graph6 roundtrips, including the long form") {
    for (int i = 0; i < 30; i++) {
        Graph g = random_graph(1 + i % 14, 7 * i + 1);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    Graph big = random_graph(70, 99);  // forces the 4-byte long form
    std::string enc = to_graph6(big);
    CHECK(enc.size() >= 4);
    CHECK(enc[0] == '~');
    CHECK(from_graph6(enc) == big);
    CHECK(from_graph6(to_graph6(random_graph(63, 5))) == random_graph(63, 5));
    // trailing newline tolerated
    CHECK(from_graph6("Bw\n") == complete_graph(3));
}

TEST_CASE("edge JSON roundtrips with exact bytes for small cases") {
    CHECK(to_edge_json(Graph(1, {})) == "{\"n\":1,\"edges\":[]}");
    Graph p3 = path_graph(3);
    CHECK(to_edge_json(p3) == "{\"n\":3,\"edges\":[[0,1],[1,2]]}");
    for (int i = 0; i < 30; i++) {
        Graph g = random_graph(1 + i % 12, 31 * i + 2);
        CHECK(from_edge_json(to_edge_json(g)) == g);
    }
}

TEST_CASE("parse_graph dispatches on the leading byte") {
    CHECK(parse_graph("  {\"n\":2,\"edges\":[[0,1]]}\n") == path_graph(2));
    CHECK(parse_graph("Bw") == complete_graph(3));
}

TEST_CASE("malformed inputs give parse errors with byte offsets") {
    // graph6: adjacency section too short
    CHECK_THROWS_AS(from_graph6("D"), ParseError);
    // graph6: character below the printable range
    CHECK_THROWS_AS(from_graph6("B\x01"), ParseError);
    // graph6: nonzero padding bits
    try {
        from_graph6("B~");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 1);
        CHECK(std::string(e.what()).find("byte 1") != std::string::npos);
    }
    // empty input
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph("   "), ParseError);

    // JSON: syntax and content errors
    CHECK_THROWS_AS(from_edge_json("{\"n\":2,\"edges\":[[0,1]"), ParseError);
    CHECK_THROWS_AS(from_edge_json("{\"edges\":[]}"), ParseError);
    CHECK_THROWS_AS(from_edge_json("{\"n\":2,\"edges\":[[0,2]]}"), ParseError);
    CHECK_THROWS_AS(from_edge_json("{\"n\":2,\"edges\":[[0,0]]}"), ParseError);
    CHECK_THROWS_AS(from_edge_json("{\"n\":-1,\"edges\":[]}"), ParseError);
    CHECK_THROWS_AS(from_edge_json("{\"n\":2,\"edges\":[[0]]}"), ParseError);
}
