#include "doctest.h"
#include "oracles.hpp"
#include "tpf/generators.hpp"
#include "tpf/graph.hpp"
#include "tpf/rng.hpp"
#include "tpf/treewidth.hpp"

using namespace tpf;

static Graph random_graph(int n, uint64_t seed, int num, int den) {
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (rng.chance(num, den)) edges.push_back({u, v});
    return Graph(n, edges);
}

TEST_CASE("treewidth of the standard families") {
    CHECK(treewidth(Graph(1, {})).width == 0);
    CHECK(treewidth(Graph(4, {})).width == 0);
    CHECK(treewidth(path_graph(7)).width == 1);
    Graph tree(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
    CHECK(treewidth(tree).width == 1);
    CHECK(treewidth(cycle_graph(7)).width == 2);
    CHECK(treewidth(complete_graph(5)).width == 4);
    CHECK(treewidth(complete_bipartite(3, 3)).width == 3);
    auto r = treewidth(make_wall(3));
    CHECK(r.width == 3);
    CHECK(r.exact);
    CHECK(r.lower_bound == 3);
    CHECK(r.upper_bound == 3);
}

TEST_CASE("returned decompositions validate at the returned width") {
    for (int trial = 0; trial < 30; trial++) {
        Graph g = random_graph(3 + trial % 9, 900 + trial, 1, 2);
        auto r = treewidth(g);
        CHECK(r.exact);
        auto rep = validate_decomposition(g, r.decomposition);
        CHECK_MESSAGE(rep.ok, rep.violation);
        CHECK(rep.width == r.width);
    }
}

TEST_CASE("exact treewidth agrees with the subset dynamic program") {
    // every isomorphism class up to 6 vertices
    for (int n = 1; n <= 6; n++)
        for (const auto& g : oracle::all_graphs(n)) {
            auto r = treewidth(g);
            CHECK(r.exact);
            CHECK(r.width == oracle::treewidth_dp(g));
        }
    // random spot checks a bit larger
    for (int trial = 0; trial < 25; trial++) {
        Graph g = random_graph(7 + trial % 5, 1700 + trial, 1 + trial % 2, 3);
        CHECK(treewidth(g).width == oracle::treewidth_dp(g));
    }
}

TEST_CASE("treewidth is monotone and behaves under disjoint union") {
    Graph u = graph_union(complete_graph(4), path_graph(5));
    CHECK(treewidth(u).width == 3);
    for (int trial = 0; trial < 15; trial++) {
        Graph g = random_graph(8, 2500 + trial, 1, 2);
        int w = treewidth(g).width;
        SplitMix64 rng(31 * trial + 7);
        VertexSet keep;
        for (int v = 0; v < g.n; v++)
            if (rng.chance(2, 3)) keep.push_back(v);
        if (keep.empty()) continue;
        CHECK(treewidth(induced_subgraph(g, keep)).width <= w);
    }
}

TEST_CASE("heuristic mode reports honest bounds above the cap") {
    Graph g = random_graph(34, 4242, 1, 6);
    auto r = treewidth(g);  // n above the default exact cap
    CHECK(!r.exact);
    CHECK(r.lower_bound <= r.width);
    CHECK(r.width == r.upper_bound);
    auto rep = validate_decomposition(g, r.decomposition);
    CHECK_MESSAGE(rep.ok, rep.violation);
    CHECK(rep.width == r.upper_bound);
}

TEST_CASE("validate_decomposition accepts the definition and reports violations") {
    Graph p3 = path_graph(3);

    // single bag
    TreeDecomposition single{Graph(1, {}), {vs_full(3)}};
    auto rep = validate_decomposition(p3, single);
    CHECK(rep.ok);
    CHECK(rep.width == 2);

    // bags on the two edges
    TreeDecomposition edges{path_graph(2), {{0, 1}, {1, 2}}};
    rep = validate_decomposition(p3, edges);
    CHECK(rep.ok);
    CHECK(rep.width == 1);

    // K_3 with bags {0,1},{1,2}: edge {0,2} uncovered
    TreeDecomposition missing{path_graph(2), {{0, 1}, {1, 2}}};
    rep = validate_decomposition(complete_graph(3), missing);
    CHECK(!rep.ok);
    CHECK(rep.violation.find("edge") != std::string::npos);

    // vertex never covered
    TreeDecomposition uncovered{path_graph(2), {{0}, {1}}};
    rep = validate_decomposition(p3, uncovered);
    CHECK(!rep.ok);

    // disconnected support for vertex 1
    TreeDecomposition disconn{path_graph(3), {{0, 1}, {0, 2}, {1, 2}}};
    rep = validate_decomposition(p3, disconn);
    CHECK(!rep.ok);
    CHECK(rep.violation.find("connected") != std::string::npos);

    // underlying graph not a tree
    TreeDecomposition cyc{cycle_graph(3), {{0, 1}, {1, 2}, {0, 2}}};
    rep = validate_decomposition(p3, cyc);
    CHECK(!rep.ok);

    // bag count mismatch
    TreeDecomposition off{path_graph(2), {vs_full(3)}};
    rep = validate_decomposition(p3, off);
    CHECK(!rep.ok);
}

TEST_CASE("random bag perturbations are caught") {
    for (int trial = 0; trial < 20; trial++) {
        Graph g = random_graph(7, 3300 + trial, 1, 2);
        auto r = treewidth(g);
        TreeDecomposition d = r.decomposition;
        REQUIRE(validate_decomposition(g, d).ok);

        // dropping one vertex from every bag must break coverage
        TreeDecomposition gone = d;
        for (auto& bag : gone.bags) bag = vs_minus(bag, {0});
        CHECK(!validate_decomposition(g, gone).ok);
    }
}

TEST_CASE("degeneracy lower-bounds treewidth") {
    CHECK(degeneracy(complete_graph(6)) == 5);
    CHECK(degeneracy(cycle_graph(9)) == 2);
    CHECK(degeneracy(path_graph(5)) == 1);
    for (int trial = 0; trial < 15; trial++) {
        Graph g = random_graph(9, 4100 + trial, 1, 2);
        CHECK(degeneracy(g) <= treewidth(g).width);
    }
}
