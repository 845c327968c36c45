#include <stdexcept>

#include "doctest.h"
#include "tpf/generators.hpp"
#include "tpf/io.hpp"
#include "tpf/rng.hpp"
#include "tpf/tree_extract.hpp"

using namespace tpf;

namespace {

// a = 0, b = 1, k internally disjoint paths [0, 2+i, 2+k+i, 1]; with wires,
// a_i sees the interior of every later path (the banana success shape)
Graph wired_graph(int k, bool wires) {
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i) {
        es.push_back({0, 2 + i});
        es.push_back({2 + i, 2 + k + i});
        es.push_back({1, 2 + k + i});
    }
    if (wires)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) es.push_back({2 + i, 2 + k + j});
    return Graph(2 + 2 * k, es);
}

PathSystem wired_system(int k) {
    PathSystem ps;
    ps.a = 0;
    ps.b = 1;
    for (int i = 0; i < k; ++i) ps.paths.push_back({0, 2 + i, 2 + k + i, 1});
    return ps;
}

Tournament acyclic_k(int n) {
    Tournament d(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) d.add_arc(u, v);
    return d;
}

}  // namespace

TEST_CASE("tournament record and underlying graph") {
    Tournament d(3);
    d.add_arc(0, 1);
    d.add_arc(1, 0);
    d.add_arc(1, 2);
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(1, 0));
    CHECK_FALSE(d.has_arc(2, 1));
    CHECK_FALSE(d.is_tournament());  // a parallel pair and a missing pair
    Graph u = d.underlying();
    CHECK(u.edge_list == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(acyclic_k(4).is_tournament());
    CHECK_THROWS_AS(d.add_arc(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(d.add_arc(0, 3), std::invalid_argument);
}

TEST_CASE("transitive subtournament search") {
    SUBCASE("acyclic orientation yields the topological order") {
        auto seq = transitive_subtournament(acyclic_k(4), 4);
        REQUIRE(seq.has_value());
        CHECK(*seq == std::vector<int>{0, 1, 2, 3});
        CHECK(*transitive_subtournament(acyclic_k(4), 2) ==
              std::vector<int>{0, 1});
    }
    SUBCASE("the 3-cycle has no transitive triple") {
        Tournament c3(3);
        c3.add_arc(0, 1);
        c3.add_arc(1, 2);
        c3.add_arc(2, 0);
        CHECK_FALSE(transitive_subtournament(c3, 3).has_value());
        CHECK(*transitive_subtournament(c3, 2) == std::vector<int>{0, 1});
    }
    SUBCASE("lexicographically least sequence wins") {
        Tournament d(4);
        d.add_arc(0, 2);
        d.add_arc(2, 3);
        d.add_arc(0, 3);
        CHECK(*transitive_subtournament(d, 3) == std::vector<int>{0, 2, 3});
    }
    SUBCASE("every tournament on 4 vertices contains a transitive triple") {
        // 2^{p-1} bound, exhaustively: all 64 orientations of K_4
        for (int bits = 0; bits < 64; ++bits) {
            Tournament d(4);
            int at = 0;
            for (int u = 0; u < 4; ++u)
                for (int v = u + 1; v < 4; ++v, ++at)
                    if (bits >> at & 1)
                        d.add_arc(u, v);
                    else
                        d.add_arc(v, u);
            CHECK(transitive_subtournament(d, 3).has_value());
        }
    }
    SUBCASE("every tournament on 5 vertices contains a transitive triple") {
        for (int bits = 0; bits < 1024; ++bits) {
            Tournament d(5);
            int at = 0;
            for (int u = 0; u < 5; ++u)
                for (int v = u + 1; v < 5; ++v, ++at)
                    if (bits >> at & 1)
                        d.add_arc(u, v);
                    else
                        d.add_arc(v, u);
            CHECK(transitive_subtournament(d, 3).has_value());
        }
    }
    SUBCASE("the Paley tournament on 7 vertices has no transitive quadruple") {
        Tournament qr(7);
        for (int i = 0; i < 7; ++i)
            for (int k : {1, 2, 4}) qr.add_arc(i, (i + k) % 7);
        CHECK(transitive_subtournament(qr, 3).has_value());
        CHECK_FALSE(transitive_subtournament(qr, 4).has_value());
    }
    SUBCASE("sampled tournaments on 8 vertices all contain transitive quadruples") {
        SplitMix64 rng(20260814);
        for (int trial = 0; trial < 300; ++trial) {
            Tournament d(8);
            for (int u = 0; u < 8; ++u)
                for (int v = u + 1; v < 8; ++v)
                    if (rng.chance(1, 2))
                        d.add_arc(u, v);
                    else
                        d.add_arc(v, u);
            CHECK(transitive_subtournament(d, 4).has_value());
        }
    }
    SUBCASE("caps and degenerate requests") {
        CHECK_FALSE(transitive_subtournament(acyclic_k(3), 4).has_value());
        CHECK_THROWS_AS(transitive_subtournament(acyclic_k(3), 0),
                        std::invalid_argument);
        CHECK_THROWS_AS(transitive_subtournament(acyclic_k(3), 9), CapExceeded);
    }
}

TEST_CASE("connectify classifies the four outcomes") {
    SUBCASE("spaced vertices on a long path") {
        std::vector<Edge> es;
        for (int i = 0; i + 1 < 12; ++i) es.push_back({i, i + 1});
        Graph g(12, es);
        ConnectifyResult r = connectify(g, {0, 4, 8}, 3);
        CHECK(r.outcome == "path");
        CHECK(r.h == VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8});
        CHECK(r.h_cap_s == VertexSet{0, 4, 8});
        CHECK(r.root == -1);
    }
    SUBCASE("subdivided star with S at the leaves") {
        Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
        Graph g = subdivide_each_edge(star, 1);  // legs 0-4-1, 0-5-2, 0-6-3
        ConnectifyResult r = connectify(g, {1, 2, 3}, 3);
        CHECK(r.outcome == "subdivided_star");
        CHECK(r.h == VertexSet{0, 1, 2, 3, 4, 5, 6});
        CHECK(r.h_cap_s == VertexSet{1, 2, 3});
        CHECK(r.root == 0);
    }
    SUBCASE("two-branch caterpillar with S at the leaves") {
        Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}});
        ConnectifyResult r = connectify(g, {0, 3, 4, 5}, 4);
        CHECK(r.outcome == "caterpillar");
        CHECK(r.h == VertexSet{0, 1, 2, 3, 4, 5});
        CHECK(r.h_cap_s == VertexSet{0, 3, 4, 5});
    }
    SUBCASE("line graph of a caterpillar: the net") {
        Graph net(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
        ConnectifyResult r = connectify(net, {3, 4, 5}, 3);
        CHECK(r.outcome == "line_graph_of_caterpillar");
        CHECK(r.h == VertexSet{0, 1, 2, 3, 4, 5});
        CHECK(r.h_cap_s == VertexSet{3, 4, 5});
    }
    SUBCASE("a triangle is the line graph of the 3-leaf star") {
        Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        ConnectifyResult r = connectify(k4, {0, 1, 2}, 3);
        CHECK(r.outcome == "line_graph_of_caterpillar");
        CHECK(r.h == VertexSet{0, 1, 2});
    }
    SUBCASE("insufficient when S cannot supply h vertices") {
        Graph p3(3, {{0, 1}, {1, 2}});
        ConnectifyResult r = connectify(p3, {1}, 2);
        CHECK(r.outcome == "insufficient");
        CHECK(r.h.empty());
    }
    SUBCASE("caps and malformed input") {
        std::vector<Edge> es;
        for (int i = 0; i + 1 < 21; ++i) es.push_back({i, i + 1});
        CHECK_THROWS_AS(connectify(Graph(21, es), {0}, 2), CapExceeded);
        Graph p3(3, {{0, 1}, {1, 2}});
        CHECK_THROWS_AS(connectify(p3, {0}, 5), CapExceeded);
        CHECK_THROWS_AS(connectify(p3, {1, 0}, 2), std::invalid_argument);
        CHECK_THROWS_AS(connectify(Graph(2, {}), {0}, 1), std::invalid_argument);
    }
}

TEST_CASE("banana selection") {
    SUBCASE("wired construction succeeds and returns the tail") {
        Graph g = wired_graph(4, true);
        BananaResult r = banana(g, 0, 1, wired_system(4), 3);
        REQUIRE(r.ok);
        CHECK(r.selected == std::vector<int>{1, 2, 3});
        CHECK(r.stable == VertexSet{1, 3, 4, 5});
        CHECK(r.stage == 0);
    }
    SUBCASE("short paths with b-adjacent first neighbours are filtered out") {
        Graph g = wired_graph(4, true);
        // an extra two-edge path 0-10-1: its first neighbour touches b
        std::vector<Edge> es = g.edge_list;
        es.push_back({0, 10});
        es.push_back({1, 10});
        Graph g2(11, es);
        PathSystem ps = wired_system(4);
        ps.paths.push_back({0, 10, 1});
        BananaResult r = banana(g2, 0, 1, ps, 3);
        REQUIRE(r.ok);
        CHECK(r.selected == std::vector<int>{1, 2, 3});
        CHECK(r.stable == VertexSet{1, 3, 4, 5});
    }
    SUBCASE("pairwise adjacent first neighbours die at stage 1") {
        Graph g = wired_graph(3, false);
        std::vector<Edge> es = g.edge_list;
        for (int i = 2; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) es.push_back({i, j});
        Graph g2(g.n, es);
        BananaResult r = banana(g2, 0, 1, wired_system(3), 2);
        CHECK_FALSE(r.ok);
        CHECK(r.stage == 1);
        CHECK(r.witness == VertexSet{1, 2});  // lex-least stable a_P plus b
        CHECK(r.why.find("stable") != std::string::npos);
    }
    SUBCASE("edgeless underlying digraph dies at stage 3 with the stable set") {
        Graph g = wired_graph(4, false);
        BananaResult r = banana(g, 0, 1, wired_system(4), 3);
        CHECK_FALSE(r.ok);
        CHECK(r.stage == 3);
        CHECK(r.witness == VertexSet{2, 3, 4, 5});
        CHECK(r.why.find("transitive") != std::string::npos);
    }
    SUBCASE("deterministic") {
        Graph g = wired_graph(5, true);
        BananaResult r1 = banana(g, 0, 1, wired_system(5), 4);
        BananaResult r2 = banana(g, 0, 1, wired_system(5), 4);
        CHECK(r1.selected == r2.selected);
        CHECK(r1.stable == r2.stable);
    }
    SUBCASE("input errors") {
        Graph g = wired_graph(3, true);
        PathSystem ps = wired_system(3);
        CHECK_THROWS_AS(banana(g, 0, 1, ps, 0), std::invalid_argument);
        CHECK_THROWS_AS(banana(g, 0, 2, ps, 1), std::invalid_argument);
        PathSystem broken = ps;
        broken.paths[0] = {0, 2, 1};  // 2-1 is not an edge
        CHECK_THROWS_AS(banana(g, 0, 1, broken, 1), std::invalid_argument);
    }
}

TEST_CASE("tree witness validation and json") {
    Graph g(4, {{0, 1}, {0, 2}});
    TreeWitness w;
    w.root = 0;
    w.parent = {{1, 0}, {2, 0}};
    w.depth = {{0, 0}, {1, 1}, {2, 1}};
    VertexSet allowed{0, 1, 2};

    SUBCASE("a correct star validates") {
        CHECK(w.validate(g, 2, 1, 3, allowed));
        CHECK(w.vertices() == VertexSet{0, 1, 2});
    }
    SUBCASE("defects are reported") {
        std::string why;
        TreeWitness bad = w;
        bad.depth[2] = 2;
        CHECK_FALSE(bad.validate(g, 2, 1, 3, allowed, &why));
        CHECK(why.find("depth") != std::string::npos);
        CHECK_FALSE(w.validate(g, 2, 1, 1, allowed, &why));  // b inside
        CHECK(why.find("b occurs") != std::string::npos);
        CHECK_FALSE(w.validate(g, 2, 1, 3, {0, 1}, &why));
        CHECK(why.find("allowed") != std::string::npos);
        CHECK_FALSE(w.validate(g, 3, 1, 3, allowed, &why));  // root wants 3 kids
        CHECK(why.find("children") != std::string::npos);
        bad = w;
        bad.parent[1] = 2;  // 1-2 is not an edge of g
        CHECK_FALSE(bad.validate(g, 2, 1, 3, allowed, &why));
        CHECK(why.find("missing") != std::string::npos);
        bad = w;
        bad.parent.erase(2);
        CHECK_FALSE(bad.validate(g, 2, 1, 3, allowed, &why));
    }
    SUBCASE("json round trip") {
        std::string text = tree_witness_to_json(w);
        TreeWitness back = tree_witness_from_json(text);
        CHECK(back.root == w.root);
        CHECK(back.parent == w.parent);
        CHECK(back.depth == w.depth);
        CHECK(text ==
              R"({"root":0,"parent":{"1":0,"2":0},"depth":{"0":0,"1":1,"2":1}})");
    }
    SUBCASE("malformed json is rejected") {
        CHECK_THROWS_AS(tree_witness_from_json("nonsense"), ParseError);
        CHECK_THROWS_AS(tree_witness_from_json(R"({"root":0})"), ParseError);
        CHECK_THROWS_AS(
            tree_witness_from_json(R"({"root":0,"parent":[],"depth":{}})"),
            ParseError);
        CHECK_THROWS_AS(tree_witness_from_json(
                            R"({"root":0,"parent":{"x":0},"depth":{"0":0}})"),
                        ParseError);
    }
}

TEST_CASE("extract_tree base case and starvation") {
    SUBCASE("two paths give the star") {
        Graph g(4, {{0, 2}, {2, 1}, {0, 3}, {3, 1}});
        PathSystem ps{0, 1, {{0, 2, 1}, {0, 3, 1}}};
        ExtractResult r = extract_tree(g, 0, 1, ps, 2, 1);
        REQUIRE(r.ok);
        CHECK(r.tree.root == 0);
        CHECK(r.tree.parent == std::map<int, int>{{2, 0}, {3, 0}});
        CHECK(r.tree.depth == std::map<int, int>{{0, 0}, {2, 1}, {3, 1}});
    }
    SUBCASE("one path short of the star fails at depth 0") {
        Graph g(3, {{0, 2}, {2, 1}});
        PathSystem ps{0, 1, {{0, 2, 1}}};
        ExtractResult r = extract_tree(g, 0, 1, ps, 2, 1);
        CHECK_FALSE(r.ok);
        CHECK(r.fail_depth == 0);
        CHECK(r.tree.root == 0);
        CHECK(r.tree.depth.size() == 1);
    }
    SUBCASE("too few paths for blocks fails at depth 0") {
        Graph g = wired_graph(4, true);
        ExtractResult r = extract_tree(g, 0, 1, wired_system(4), 2, 2);
        CHECK_FALSE(r.ok);
        CHECK(r.fail_depth == 0);
        CHECK(r.why.find("starves") != std::string::npos);
    }
    SUBCASE("input errors") {
        Graph g(4, {{0, 2}, {2, 1}, {0, 3}, {3, 1}});
        PathSystem ps{0, 1, {{0, 2, 1}, {0, 3, 1}}};
        CHECK_THROWS_AS(extract_tree(g, 0, 1, ps, 0, 1), std::invalid_argument);
        CHECK_THROWS_AS(extract_tree(g, 0, 1, ps, 2, 0), std::invalid_argument);
        CHECK_THROWS_AS(extract_tree(g, 0, 2, ps, 2, 1), std::invalid_argument);
    }
}

TEST_CASE("extract_tree builds layered trees per the block wiring") {
    SUBCASE("depth two, binary") {
        Graph g = wired_graph(7, true);
        ExtractResult r = extract_tree(g, 0, 1, wired_system(7), 2, 2);
        REQUIRE(r.ok);
        CHECK(r.tree.root == 0);
        // selection drops path 0; blocks {1;2,3} and {4;5,6}; children are
        // re-routed through the wire into each later interior
        std::map<int, int> parent{{3, 0},  {6, 0},  {11, 3},
                                  {12, 3}, {14, 6}, {15, 6}};
        std::map<int, int> depth{{0, 0},  {3, 1},  {6, 1}, {11, 2},
                                 {12, 2}, {14, 2}, {15, 2}};
        CHECK(r.tree.parent == parent);
        CHECK(r.tree.depth == depth);
        VertexSet allowed = vs_full(g.n);
        CHECK(r.tree.validate(g, 2, 2, 1, allowed));
    }
    SUBCASE("depth two, ternary") {
        Graph g = wired_graph(13, true);
        ExtractResult r = extract_tree(g, 0, 1, wired_system(13), 3, 2);
        REQUIRE(r.ok);
        std::map<int, int> parent{{3, 0},   {7, 0},   {11, 0},  {17, 3},
                                  {18, 3},  {19, 3},  {21, 7},  {22, 7},
                                  {23, 7},  {25, 11}, {26, 11}, {27, 11}};
        CHECK(r.tree.parent == parent);
        CHECK(r.tree.depth.at(27) == 2);
        CHECK(r.tree.validate(g, 3, 2, 1, vs_full(g.n)));
    }
    SUBCASE("blocks too thin starve one level down") {
        Graph g = wired_graph(6, true);
        ExtractResult r = extract_tree(g, 0, 1, wired_system(6), 2, 2);
        CHECK_FALSE(r.ok);
        CHECK(r.fail_depth == 1);
        CHECK(r.why.find("star needs 2") != std::string::npos);
        // partial tree: the root plus the first block's new root
        CHECK(r.tree.root == 0);
        CHECK(r.tree.depth.count(3));
    }
    SUBCASE("deterministic") {
        Graph g = wired_graph(7, true);
        ExtractResult r1 = extract_tree(g, 0, 1, wired_system(7), 2, 2);
        ExtractResult r2 = extract_tree(g, 0, 1, wired_system(7), 2, 2);
        CHECK(r1.tree.parent == r2.tree.parent);
    }
}

TEST_CASE("kierstead-penrice trichotomy") {
    SUBCASE("a T_d^r host yields the tree") {
        Graph g = make_T_d_r(3, 2).first;
        TrichotomyResult r = kp_trichotomy(g, 3, 2, 3, 3);
        CHECK(r.kind == "T_d_r");
        CHECK(r.witness == vs_full(g.n));
    }
    SUBCASE("clique") {
        std::vector<Edge> es;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v) es.push_back({u, v});
        TrichotomyResult r = kp_trichotomy(Graph(6, es), 2, 2, 4, 6);
        CHECK(r.kind == "K_t");
        CHECK(r.witness.size() == 6);
    }
    SUBCASE("complete bipartite") {
        std::vector<Edge> es;
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v) es.push_back({u, 4 + v});
        TrichotomyResult r = kp_trichotomy(Graph(8, es), 2, 2, 4, 5);
        CHECK(r.kind == "K_ss");
        CHECK(r.witness.size() == 8);
    }
    SUBCASE("none and caps") {
        TrichotomyResult r = kp_trichotomy(Graph(2, {{0, 1}}), 2, 1, 2, 3);
        CHECK(r.kind == "none");
        CHECK_THROWS_AS(kp_trichotomy(Graph(21, {}), 1, 1, 1, 1), CapExceeded);
        CHECK_THROWS_AS(kp_trichotomy(Graph(2, {}), 0, 1, 1, 1),
                        std::invalid_argument);
    }
}

TEST_CASE("theorem 1.7 pipeline reports its margins") {
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    SUBCASE("membership fails on C_6 versus P_4") {
        std::vector<Edge> es;
        for (int i = 0; i < 6; ++i) es.push_back({std::min(i, (i + 1) % 6),
                                                  std::max(i, (i + 1) % 6)});
        PipelineReport rep = theorem_1_7_pipeline(Graph(6, es), p4, 3);
        CHECK_FALSE(rep.member);
        CHECK(rep.margin == "membership");
        REQUIRE(rep.stages.size() == 1);
        CHECK(rep.stages[0].outcome.find("induced copy of F") !=
              std::string::npos);
    }
    SUBCASE("a small member has no strong block") {
        Graph p3(3, {{0, 1}, {1, 2}});
        PipelineReport rep = theorem_1_7_pipeline(p3, p4, 3);
        CHECK(rep.member);
        CHECK(rep.margin.find("block") != std::string::npos);
        bool saw_tw = false;
        for (const PipelineStage& st : rep.stages)
            if (st.name == "treewidth") saw_tw = st.outcome.find("1") == 0;
        CHECK(saw_tw);
        CHECK_FALSE(rep.tree_found);
    }
    SUBCASE("a high-connectivity member runs every stage") {
        // two non-adjacent hubs over a 3-vertex spine: in the class for t=4,
        // P_4-free, and {0,1} is a strong 2-block
        Graph g(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3},
                    {3, 4}});
        PipelineReport rep = theorem_1_7_pipeline(g, p4, 4);
        CHECK(rep.member);
        CHECK_FALSE(rep.tree_found);
        CHECK_FALSE(rep.f_found);
        REQUIRE(rep.stages.size() == 7);
        CHECK(rep.stages[3].outcome == "found k=2 block {0 1}");
        CHECK(rep.stages[4].outcome == "a=0 b=1 with 2 paths");
        CHECK(rep.margin.find("starves") != std::string::npos);
        REQUIRE(rep.tree.has_value());
        CHECK(rep.tree->root == 0);  // the partial tree: just the root
        CHECK(rep.tree->depth.size() == 1);
    }
    SUBCASE("F must be a forest") {
        Graph c3(3, {{0, 1}, {0, 2}, {1, 2}});
        CHECK_THROWS_AS(theorem_1_7_pipeline(Graph(4, {}), c3, 3),
                        std::invalid_argument);
    }
}
