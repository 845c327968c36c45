#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "tpf/generators.hpp"
#include "tpf/io.hpp"
#include "tpf/strips.hpp"

using namespace tpf;

namespace {

Graph extend(const Graph& g, int extra, const std::vector<Edge>& more) {
    std::vector<Edge> es = g.edge_list;
    es.insert(es.end(), more.begin(), more.end());
    return Graph(g.n + extra, es);
}

// Workhorse pyramid: apex 0, base {1,2,3}, paths 0-4-5-1, 0-6-7-2, 0-8-3.
std::pair<Graph, PyramidEmbedding> long_pyramid() { return make_pyramid(3, 3, 2); }

// A strip over the five-edge smooth tree with branch vertices 0 (leaves 2, 3)
// and 1 (leaves 4, 5).  Host: apex 0; edge {0,1} carries the rung 1-2, edge
// {0,2} the rung 3-4-5, edge {0,3} the rung 6-7, edges {1,4} and {1,5} the
// rungs 8-9 and 10-11.  Interfaces are the rung ends nearer the respective
// tree vertex; vertex 12 (optional) is a jewel attached to {1,2,3,4}.
struct HTree {
    Graph host;
    StripStructure strip;
};

HTree make_htree(bool with_jewel, bool stray_edge = false) {
    std::vector<Edge> es{{1, 2},  {3, 4},  {4, 5},  {6, 7},  {8, 9},  {10, 11},
                         {1, 3},  {1, 6},  {3, 6},  {2, 8},  {2, 10}, {8, 10},
                         {0, 5},  {0, 7},  {0, 9},  {0, 11}};
    int n = 12;
    if (with_jewel) {
        for (int x : {1, 2, 3, 4}) es.push_back({12, x});
        n = 13;
    }
    if (stray_edge) es.push_back({5, 7});
    HTree h;
    h.host = Graph(n, es);
    StripStructure& s = h.strip;
    s.host = h.host;
    s.apex = 0;
    s.tree.tree = Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    s.emap[{0, 1}] = {1, 2};
    s.emap[{0, 2}] = {3, 4, 5};
    s.emap[{0, 3}] = {6, 7};
    s.emap[{1, 4}] = {8, 9};
    s.emap[{1, 5}] = {10, 11};
    s.evmap[{{0, 1}, 0}] = {1};
    s.evmap[{{0, 1}, 1}] = {2};
    s.evmap[{{0, 2}, 0}] = {3};
    s.evmap[{{0, 2}, 2}] = {5};
    s.evmap[{{0, 3}, 0}] = {6};
    s.evmap[{{0, 3}, 3}] = {7};
    s.evmap[{{1, 4}, 1}] = {8};
    s.evmap[{{1, 4}, 4}] = {9};
    s.evmap[{{1, 5}, 1}] = {10};
    s.evmap[{{1, 5}, 5}] = {11};
    return h;
}

// K4 as a degenerate strip: each edge of the 3-star carries one triangle
// vertex lying in both of its interfaces.
StripStructure k4_strip() {
    StripStructure s;
    s.host = Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    s.apex = 0;
    s.tree.tree = Graph(4, {{0, 1}, {0, 2}, {0, 3}});
    for (int i = 1; i <= 3; i++) {
        s.emap[{0, i}] = {i};
        s.evmap[{{0, i}, 0}] = {i};
        s.evmap[{{0, i}, i}] = {i};
    }
    return s;
}

}  // namespace

TEST_CASE("smooth tree recognition") {
    SmoothTree star{Graph(4, {{0, 1}, {0, 2}, {0, 3}})};
    CHECK(!star.violation().has_value());
    CHECK(star.leaves() == VertexSet{1, 2, 3});
    CHECK(star.branch_vertices() == VertexSet{0});
    CHECK(star.is_leaf(1));
    CHECK(!star.is_leaf(0));

    CHECK(SmoothTree{path_graph(3)}.violation() ==
          std::string("vertex 1 has degree two"));
    CHECK(SmoothTree{Graph(3, {})}.violation() == std::string("not a tree"));
    CHECK(SmoothTree{cycle_graph(4)}.violation() == std::string("not a tree"));
    CHECK(SmoothTree{Graph(2, {{0, 1}})}.violation() ==
          std::string("fewer than three vertices"));
}

TEST_CASE("canonical pyramid strip and accessors") {
    auto [g, emb] = long_pyramid();
    StripStructure s = canonical_pyramid_strip(g, emb);
    CHECK(s.apex == 0);
    CHECK(s.tree.tree.n == 4);
    CHECK(s.eta_e({0, 1}) == VertexSet{1, 4, 5});
    CHECK(s.eta_e({0, 2}) == VertexSet{2, 6, 7});
    CHECK(s.eta_e({0, 3}) == VertexSet{3, 8});
    CHECK(s.eta_ev({0, 1}, 0) == VertexSet{1});
    CHECK(s.eta_ev({0, 1}, 1) == VertexSet{4});
    CHECK(s.eta_v(0).empty());
    CHECK(s.eta_v(9).empty());  // absent key
    CHECK(s.big_b(0) == VertexSet{1, 2, 3});
    CHECK(s.eta_circ({0, 1}) == VertexSet{5});
    CHECK(s.eta_t() == vs_minus(vs_full(9), {0}));
    CHECK(s.eta_plus() == vs_full(9));
    CHECK(s.eta_sub({0, 1}) == VertexSet{1, 4, 5});
    CHECK(s.eta_sub({1}) == VertexSet{});

    auto [g2, emb2] = make_pyramid(1, 2, 2);
    CHECK_THROWS_AS(canonical_pyramid_strip(g2, emb2), std::invalid_argument);
}

TEST_CASE("strip json round trip and parse errors") {
    auto [g, emb] = long_pyramid();
    StripStructure s = canonical_pyramid_strip(g, emb);
    StripStructure back = strip_from_json(g, to_strip_json(s));
    CHECK(back == s);

    HTree h = make_htree(false);
    CHECK(to_strip_json(strip_from_json(h.host, to_strip_json(h.strip))) ==
          to_strip_json(h.strip));

    CHECK_THROWS_AS(strip_from_json(g, "{"), ParseError);
    CHECK_THROWS_AS(strip_from_json(g, "[]"), ParseError);
    CHECK_THROWS_AS(strip_from_json(g, "{\"apex\":0}"), ParseError);
    std::string head = R"({"tree":{"n":4,"edges":[[0,1],[0,2],[0,3]]},"apex":0,)";
    CHECK_THROWS_AS(
        strip_from_json(g, head + R"("vmap":{},"emap":{},"evmap":{"0-2@1":[5]}})"),
        ParseError);
    CHECK_THROWS_AS(
        strip_from_json(g, head + R"("vmap":{},"emap":{"1-0":[4]},"evmap":{}})"),
        ParseError);
    CHECK_THROWS_AS(
        strip_from_json(g, head + R"("vmap":{"x":[]},"emap":{},"evmap":{}})"),
        ParseError);
    CHECK_THROWS_AS(
        strip_from_json(g, head + R"("vmap":{},"emap":{"0-1":[true]},"evmap":{}})"),
        ParseError);
}

TEST_CASE("validate_strip accepts well-formed strips") {
    auto [g, emb] = long_pyramid();
    StripReport rep = validate_strip(canonical_pyramid_strip(g, emb));
    CHECK(rep.ok);
    CHECK(rep.axiom.empty());
    CHECK(rep.tame);
    CHECK(rep.substantial);
    CHECK(rep.rich);

    HTree h = make_htree(true);
    rep = validate_strip(h.strip);
    CHECK(rep.ok);
    CHECK(rep.tame);
    CHECK(rep.substantial);
    CHECK(rep.rich);

    rep = validate_strip(k4_strip());
    CHECK(rep.ok);
    CHECK(rep.tame);
    CHECK(!rep.substantial);
    CHECK(!rep.rich);
}

TEST_CASE("validate_strip reports the first broken axiom") {
    auto [g, emb] = long_pyramid();
    StripStructure base = canonical_pyramid_strip(g, emb);

    StripStructure s = base;
    s.apex = 99;
    CHECK(validate_strip(s).axiom == "domain");

    s = base;
    s.emap[{1, 2}] = {};
    CHECK(validate_strip(s).axiom == "domain");

    s = base;
    s.evmap[{{0, 1}, 2}] = {5};
    CHECK(validate_strip(s).axiom == "domain");

    s = base;
    s.vmap[0] = {0};  // contains the apex
    CHECK(validate_strip(s).axiom == "domain");

    s = base;
    s.tree.tree = path_graph(3);
    CHECK(validate_strip(s).axiom == "domain");  // emap keys no longer tree edges

    s = base;
    s.vmap.clear();
    s.emap.clear();
    s.evmap.clear();
    s.tree.tree = path_graph(3);
    CHECK(validate_strip(s).axiom == "tree");

    s = base;
    s.vmap[0] = {5};  // also lies in eta(0-1)
    CHECK(validate_strip(s).axiom == "S1");

    Graph gi = extend(g, 1, {});  // isolated vertex 9
    s = canonical_pyramid_strip(gi, emb);
    s.vmap[1] = {9};
    CHECK(validate_strip(s).axiom == "S2");

    s = base;
    s.evmap.erase({{0, 1}, 1});
    CHECK(validate_strip(s).axiom == "S3");

    s = base;
    s.evmap[{{0, 1}, 1}] = {4, 9};  // 9 is not in eta(0-1)
    CHECK(validate_strip(s).axiom == "domain");  // out of range on this host

    HTree broken = make_htree(false, true);  // stray edge 5-7
    CHECK(validate_strip(broken.strip).axiom == "S4");

    // S5: cut the rung 3-4-5 so 3 cannot reach the far interface.
    HTree h5 = make_htree(false);
    std::vector<Edge> es;
    for (const Edge& e : h5.host.edge_list)
        if (e != Edge{3, 4}) es.push_back(e);
    es.push_back({3, 5});  // keep S4/S8 shape: 3 still reaches 5 directly...
    HTree h5b = make_htree(false);
    h5b.host = Graph(12, es);
    h5b.strip.host = h5b.host;
    // ...but 4 is now stranded inside eta(0-2).
    CHECK(validate_strip(h5b.strip).axiom == "S5");
    CHECK(validate_strip(h5b.strip).witness.find("4") != std::string::npos);

    Graph g6 = extend(g, 1, {{9, 7}});
    s = canonical_pyramid_strip(g6, emb);
    s.vmap[0] = {9};
    CHECK(validate_strip(s).axiom == "S6");

    s = canonical_pyramid_strip(gi, emb);
    s.vmap[0] = {9};
    CHECK(validate_strip(s).axiom == "S7");

    // Extra apex edge: build the strip on the clean host first, since the
    // chord 0-5 invalidates the pyramid embedding itself.
    Graph g8 = extend(g, 0, {{0, 5}});
    s = canonical_pyramid_strip(g, emb);
    s.host = g8;
    CHECK(validate_strip(s).axiom == "S8");
}

TEST_CASE("is_trapped") {
    auto [g, emb] = long_pyramid();
    CHECK(is_trapped(g, vs_full(9), 0));
    CHECK(!is_trapped(g, vs_minus(vs_full(9), {5}), 0));

    // 9 adjacent to 4: it enters the second neighbourhood of the apex and
    // lifts 4 to degree three.
    Graph g2 = extend(g, 1, {{9, 4}});
    CHECK(!is_trapped(g2, vs_full(9), 0));
    CHECK(!is_trapped(g2, vs_full(10), 0));

    // 9 adjacent to 5 only: outside the second neighbourhood, harmless.
    Graph g3 = extend(g, 1, {{9, 5}});
    CHECK(is_trapped(g3, vs_full(10), 0));
    CHECK(is_trapped(g3, vs_full(9), 0));

    CHECK_THROWS_AS(is_trapped(g, {1, 2}, 0), std::invalid_argument);
}

TEST_CASE("pyramid_local_location and is_wide") {
    auto [g, emb] = long_pyramid();
    CHECK(pyramid_local_location(emb, {4, 5}) == std::string("P1"));
    CHECK(pyramid_local_location(emb, {2, 6, 7}) == std::string("P2"));
    CHECK(pyramid_local_location(emb, {1, 2}) == std::string("base"));
    CHECK(pyramid_local_location(emb, {}) == std::string("P1"));
    CHECK(pyramid_local_location(emb, {1}) == std::string("P1"));
    CHECK(pyramid_local_location(emb, {0}) == std::string("P1"));
    CHECK(!pyramid_local_location(emb, {5, 7}).has_value());
    CHECK(!pyramid_local_location(emb, {3, 4}).has_value());

    Graph gw = extend(g, 1, {{9, 5}, {9, 2}, {9, 3}});
    CHECK(is_wide(gw, emb, 9));
    Graph gl = extend(g, 1, {{9, 4}, {9, 5}});
    CHECK(!is_wide(gl, emb, 9));
    CHECK_THROWS_AS(is_wide(g, emb, 5), std::invalid_argument);
}

TEST_CASE("find_corner_subpath") {
    auto [g, emb] = long_pyramid();
    Graph gc = extend(g, 1, {{9, 5}, {9, 2}, {9, 3}});
    auto cw = find_corner_subpath(gc, emb, {9});
    REQUIRE(cw.has_value());
    CHECK(cw->corner == 0);
    CHECK(cw->witness == Path{9});

    Graph g2 = extend(g, 2, {{9, 5}, {10, 2}, {10, 3}, {9, 10}});
    cw = find_corner_subpath(g2, emb, {9, 10});
    REQUIRE(cw.has_value());
    CHECK(cw->corner == 0);
    CHECK(cw->witness == Path{9, 10});
    cw = find_corner_subpath(g2, emb, {10, 9});  // reversed input, same answer
    REQUIRE(cw.has_value());
    CHECK(cw->witness == Path{9, 10});

    Graph gl = extend(g, 1, {{9, 4}, {9, 5}});
    CHECK(!find_corner_subpath(gl, emb, {9}).has_value());
}

TEST_CASE("jewels at a pyramid") {
    auto [g, emb] = long_pyramid();
    Graph gj = extend(g, 1, {{9, 1}, {9, 5}, {9, 2}, {9, 7}});
    CHECK(is_jewel_at(gj, emb, 9, 2));
    CHECK(!is_jewel_at(gj, emb, 9, 0));
    CHECK(!is_jewel_at(gj, emb, 9, 1));
    CHECK(jewel_corner(gj, emb, 9) == 2);
    CHECK(!is_jewel_at(gj, emb, 5, 0));  // inside the pyramid
    CHECK(!jewel_corner(gj, emb, 8).has_value());
}

TEST_CASE("classify_wrt_pyramid hand instances") {
    auto [g, emb] = long_pyramid();

    // The attachment must avoid N[apex] or the apex is no longer trapped.
    Graph gl = extend(g, 1, {{9, 1}, {9, 5}});
    auto cls = classify_wrt_pyramid(gl, vs_full(9), 0, emb, {9});
    CHECK(cls.kind == PyramidClassification::Kind::local);
    CHECK(cls.location == "P1");

    Graph gc = extend(g, 1, {{9, 5}, {9, 2}, {9, 3}});
    cls = classify_wrt_pyramid(gc, vs_full(9), 0, emb, {9});
    CHECK(cls.kind == PyramidClassification::Kind::corner_path);
    CHECK(cls.corner == 0);
    CHECK(cls.witness == Path{9});

    Graph g2 = extend(g, 2, {{9, 5}, {10, 2}, {10, 3}, {9, 10}});
    cls = classify_wrt_pyramid(g2, vs_full(9), 0, emb, {9, 10});
    CHECK(cls.kind == PyramidClassification::Kind::corner_path);
    CHECK(cls.witness == Path{9, 10});

    Graph gj = extend(g, 1, {{9, 1}, {9, 5}, {9, 2}, {9, 7}});
    cls = classify_wrt_pyramid(gj, vs_full(9), 0, emb, {9});
    CHECK(cls.kind == PyramidClassification::Kind::jewel);
    CHECK(cls.corner == 2);
    CHECK(cls.witness == Path{9});

    Graph go = extend(g, 1, {{9, 5}, {9, 7}});
    cls = classify_wrt_pyramid(go, vs_full(9), 0, emb, {9});
    CHECK(cls.kind == PyramidClassification::Kind::obstruction);
    REQUIRE(cls.theta.has_value());
    std::string why;
    CHECK(cls.theta->validate(go, &why));

    CHECK_THROWS_AS(classify_wrt_pyramid(gl, vs_full(9), 1, emb, {9}),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_wrt_pyramid(gl, vs_full(9), 0, emb, {5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_wrt_pyramid(gl, vs_full(9), 0, emb, {}),
                    std::invalid_argument);
}

TEST_CASE("classify_wrt_pyramid single-vertex sweep agrees with predicates") {
    auto [g0, emb] = long_pyramid();
    VertexSet attachable{1, 2, 3, 5, 7};
    int counts[4] = {0, 0, 0, 0};
    for (unsigned mask = 1; mask < 32; ++mask) {
        VertexSet at;
        std::vector<Edge> extra;
        for (int b = 0; b < 5; ++b)
            if (mask & (1u << b)) {
                at.push_back(attachable[b]);
                extra.push_back({9, attachable[b]});
            }
        Graph g = extend(g0, 1, extra);
        auto cls = classify_wrt_pyramid(g, vs_full(9), 0, emb, {9});
        bool loc = pyramid_local_location(emb, at).has_value();
        bool cor = find_corner_subpath(g, emb, {9}).has_value();
        bool jew = jewel_corner(g, emb, 9).has_value();
        counts[(int)cls.kind]++;
        switch (cls.kind) {
            case PyramidClassification::Kind::local:
                CHECK(loc);
                break;
            case PyramidClassification::Kind::corner_path:
                CHECK(!loc);
                CHECK(cor);
                break;
            case PyramidClassification::Kind::jewel:
                CHECK(!loc);
                CHECK(!cor);
                CHECK(jew);
                break;
            case PyramidClassification::Kind::obstruction:
                CHECK(!loc);
                CHECK(!cor);
                CHECK(!jew);
                CHECK((cls.theta.has_value() || cls.prism.has_value()));
                CHECK((oracle::contains_theta(g) || oracle::contains_prism(g)));
                std::string why;
                if (cls.theta) CHECK(cls.theta->validate(g, &why));
                if (cls.prism) CHECK(cls.prism->validate(g, &why));
                break;
        }
    }
    CHECK(counts[0] > 0);
    CHECK(counts[1] > 0);
    CHECK(counts[2] > 0);
    CHECK(counts[3] > 0);
}

TEST_CASE("strip_rungs") {
    auto [g, emb] = long_pyramid();
    StripStructure s = canonical_pyramid_strip(g, emb);
    RungReport rr = strip_rungs(s, {0, 1});
    REQUIRE(rr.rungs.size() == 1);
    CHECK(rr.rungs[0].path == Path{1, 5, 4});
    CHECK(rr.rungs[0].is_long());
    CHECK(rr.tilde.empty());
    CHECK_THROWS_AS(strip_rungs(s, {1, 2}), std::invalid_argument);

    rr = strip_rungs(k4_strip(), {0, 1});
    REQUIRE(rr.rungs.size() == 1);
    CHECK(rr.rungs[0].path == Path{1});
    CHECK(!rr.rungs[0].is_long());
    CHECK(rr.tilde.empty());

    // Pendant vertex 9 inside eta(0-1) lies on no rung.
    Graph gp = extend(g, 1, {{9, 5}});
    StripStructure sp = canonical_pyramid_strip(gp, emb);
    sp.emap[{0, 1}] = {1, 4, 5, 9};
    StripReport rep = validate_strip(sp);
    CHECK(rep.ok);
    CHECK(!rep.tame);
    CHECK(rep.substantial);
    rr = strip_rungs(sp, {0, 1});
    REQUIRE(rr.rungs.size() == 1);
    CHECK(rr.rungs[0].path == Path{1, 5, 4});
    CHECK(rr.tilde == VertexSet{9});
}

TEST_CASE("locality") {
    auto [g, emb] = long_pyramid();
    StripStructure s = canonical_pyramid_strip(g, emb);

    LocalityResult lr = locality(s, {});
    CHECK(lr.local);
    CHECK(lr.at_edge == Edge{0, 1});

    lr = locality(s, {1, 4, 5});
    CHECK(lr.local);
    CHECK(lr.at_edge == Edge{0, 1});

    lr = locality(s, {1, 2});
    CHECK(lr.local);
    CHECK(!lr.at_edge.has_value());
    CHECK(lr.at_vertex == 0);

    lr = locality(s, {5, 7});
    CHECK(!lr.local);
    CHECK(lr.nonlocal_pair == std::pair<int, int>{5, 7});

    lr = locality(s, {2, 3, 5});
    CHECK(!lr.local);
    CHECK(lr.nonlocal_pair == std::pair<int, int>{2, 5});

    CHECK_THROWS_AS(locality(s, {0}), std::invalid_argument);
}

TEST_CASE("eta_pyramids") {
    auto [g, emb] = long_pyramid();
    StripStructure s = canonical_pyramid_strip(g, emb);
    SeagullClaw claw{0, {{0, 1}, {0, 2}, {0, 3}}};
    auto pyrs = eta_pyramids(s, claw);
    REQUIRE(pyrs.size() == 1);
    CHECK(pyrs[0].apex == 0);
    CHECK(pyrs[0].base == std::array<int, 3>{1, 2, 3});
    CHECK(pyrs[0].paths[0] == emb.paths[0]);
    CHECK(pyrs[0].paths[1] == emb.paths[1]);
    CHECK(pyrs[0].paths[2] == emb.paths[2]);

    // Two parallel rungs on the first edge give two pyramids.
    Graph gp = extend(g, 1, {{9, 0}, {9, 5}});
    StripStructure sp = canonical_pyramid_strip(gp, emb);
    sp.emap[{0, 1}] = {1, 4, 5, 9};
    sp.evmap[{{0, 1}, 1}] = {4, 9};
    StripReport rep = validate_strip(sp);
    CHECK(rep.ok);
    CHECK(rep.substantial);
    CHECK(!rep.rich);
    pyrs = eta_pyramids(sp, claw);
    REQUIRE(pyrs.size() == 2);
    CHECK(pyrs[0].paths[0] == Path{0, 4, 5, 1});
    CHECK(pyrs[1].paths[0] == Path{0, 9, 5, 1});

    // Rung concatenation across two tree edges.
    HTree h = make_htree(false);
    SeagullClaw claw0{0, {{0, 1}, {0, 2}, {0, 3}}};
    pyrs = eta_pyramids(h.strip, claw0);
    REQUIRE(pyrs.size() == 2);
    CHECK(pyrs[0].paths[0] == Path{0, 9, 8, 2, 1});
    CHECK(pyrs[0].paths[1] == Path{0, 5, 4, 3});
    CHECK(pyrs[0].paths[2] == Path{0, 7, 6});
    CHECK(pyrs[1].paths[0] == Path{0, 11, 10, 2, 1});
    SeagullClaw claw1{1, {{0, 1}, {1, 4}, {1, 5}}};
    pyrs = eta_pyramids(h.strip, claw1);
    REQUIRE(pyrs.size() == 2);
    CHECK(pyrs[0].paths[0] == Path{0, 5, 4, 3, 1, 2});
    CHECK(pyrs[0].paths[1] == Path{0, 9, 8});
    CHECK(pyrs[0].paths[2] == Path{0, 11, 10});
    CHECK(pyrs[1].paths[0] == Path{0, 7, 6, 1, 2});

    CHECK_THROWS_AS(eta_pyramids(s, SeagullClaw{1, {{0, 1}, {0, 2}, {0, 3}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(eta_pyramids(s, SeagullClaw{0, {{0, 1}, {0, 1}, {0, 2}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(eta_pyramids(k4_strip(), claw), std::invalid_argument);
}

TEST_CASE("find_strip_jewels") {
    auto [g, emb] = long_pyramid();
    Graph gj = extend(g, 1, {{9, 1}, {9, 5}, {9, 2}, {9, 7}});
    StripStructure s = canonical_pyramid_strip(gj, emb);
    JewelIndex jw = find_strip_jewels(s);
    CHECK(jw.at_seagull.size() == 3);
    CHECK(jw.at_seagull.at({0, Edge{0, 1}, Edge{0, 2}}) == VertexSet{9});
    CHECK(jw.at_seagull.at({0, Edge{0, 1}, Edge{0, 3}}).empty());
    CHECK(jw.at_seagull.at({0, Edge{0, 2}, Edge{0, 3}}).empty());
    CHECK(jw.at_vertex(0) == VertexSet{9});
    CHECK(jw.all() == VertexSet{9});

    // No externals: all entries empty.
    JewelIndex none = find_strip_jewels(canonical_pyramid_strip(g, emb));
    CHECK(none.all().empty());
    CHECK(none.at_seagull.size() == 3);

    // Jewel on the two-branch tree, visible only at one seagull.
    HTree h = make_htree(true);
    jw = find_strip_jewels(h.strip);
    CHECK(jw.at_seagull.size() == 6);
    CHECK(jw.at_seagull.at({0, Edge{0, 1}, Edge{0, 2}}) == VertexSet{12});
    CHECK(jw.at_vertex(0) == VertexSet{12});
    CHECK(jw.at_vertex(1).empty());
    CHECK(jw.all() == VertexSet{12});

    CHECK_THROWS_AS(find_strip_jewels(k4_strip()), std::invalid_argument);
}

TEST_CASE("saturate_strip fixpoint and absorption") {
    auto [g, emb] = long_pyramid();
    StripStructure s = canonical_pyramid_strip(g, emb);
    CHECK(saturate_strip(s) == s);

    // Pendant inside an edge strip joins eta(e) as a component attachment.
    Graph gp = extend(g, 1, {{9, 5}});
    StripStructure sp = canonical_pyramid_strip(gp, emb);
    StripStructure zp = saturate_strip(sp);
    CHECK(zp.eta_e({0, 1}) == VertexSet{1, 4, 5, 9});
    CHECK(zp.eta_ev({0, 1}, 0) == VertexSet{1});
    CHECK(zp.eta_ev({0, 1}, 1) == VertexSet{4});
    CHECK(zp.eta_v(0).empty());

    // Component seeing two base vertices joins eta(v) at the branch vertex.
    Graph gv = extend(g, 1, {{9, 1}, {9, 2}});
    StripStructure sv = canonical_pyramid_strip(gv, emb);
    StripStructure zv = saturate_strip(sv);
    CHECK(zv.eta_v(0) == VertexSet{9});
    CHECK(zv.eta_e({0, 1}) == VertexSet{1, 4, 5});

    // Anticomplete vertices stay outside.
    Graph gx = extend(g, 1, {});
    StripStructure sx = canonical_pyramid_strip(gx, emb);
    CHECK(saturate_strip(sx) == sx);

    // A jewel is exempt from absorption even though its attachment is wide.
    Graph gj = extend(g, 1, {{9, 1}, {9, 5}, {9, 2}, {9, 7}});
    StripStructure sj = canonical_pyramid_strip(gj, emb);
    CHECK(saturate_strip(sj) == sj);

    CHECK_THROWS_AS(saturate_strip(k4_strip()), std::invalid_argument);
}

TEST_CASE("saturate_strip absorbs violating paths") {
    auto [g, emb] = long_pyramid();

    // One vertex complete to the other two base vertices and seeing the
    // interior of P1: it joins eta(0-1) and its interface at the centre.
    Graph g1 = extend(g, 1, {{9, 2}, {9, 3}, {9, 5}});
    StripStructure s1 = canonical_pyramid_strip(g1, emb);
    StripStructure z1 = saturate_strip(s1);
    CHECK(z1.eta_e({0, 1}) == VertexSet{1, 4, 5, 9});
    CHECK(z1.eta_ev({0, 1}, 0) == VertexSet{1, 9});
    CHECK(z1.eta_ev({0, 1}, 1) == VertexSet{4});
    StripReport rep = validate_strip(z1);
    CHECK(rep.ok);
    CHECK(rep.substantial);
    CHECK(rep.rich);

    // A two-vertex path: near end attaches inside P1, far end is complete to
    // the other base vertices; the whole path is absorbed.
    Graph g2 = extend(g, 2, {{9, 5}, {9, 10}, {10, 2}, {10, 3}});
    StripStructure s2 = canonical_pyramid_strip(g2, emb);
    StripStructure z2 = saturate_strip(s2);
    CHECK(z2.eta_e({0, 1}) == VertexSet{1, 4, 5, 9, 10});
    CHECK(z2.eta_ev({0, 1}, 0) == VertexSet{1, 10});
    CHECK(z2.eta_ev({0, 1}, 1) == VertexSet{4});
    rep = validate_strip(z2);
    CHECK(rep.ok);
    CHECK(rep.tame);
    CHECK(rep.substantial);
    CHECK(rep.rich);
}

TEST_CASE("saturate_strip extracts an obstruction from a bad path") {
    auto [g, emb] = long_pyramid();
    // The far end reaches only one base vertex: the augmented host contains
    // a theta, which saturation must surface.
    Graph g2 = extend(g, 2, {{9, 5}, {9, 10}, {10, 2}});
    StripStructure s2 = canonical_pyramid_strip(g2, emb);
    CHECK_THROWS_AS(saturate_strip(s2), ObstructionFound);
    try {
        saturate_strip(s2);
    } catch (const ObstructionFound& ex) {
        CHECK((ex.theta.has_value() || ex.prism.has_value()));
        std::string why;
        if (ex.theta) CHECK(ex.theta->validate(g2, &why));
        if (ex.prism) CHECK(ex.prism->validate(g2, &why));
        CHECK(oracle::contains_theta(g2));
    }
}
