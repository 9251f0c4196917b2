#include <doctest.h>

#include <cmath>

#include "cyclefit/fit.hpp"
#include "cyclefit/named_graphs.hpp"
#include "cyclefit/witness.hpp"
#include "testutil.hpp"

using namespace cyclefit;

namespace {

// Crafted hub instance: V1, V2 of `half` vertices with a complete blue cross
// pair, red G(half,1/2) interiors, and one hub joined blue to everything.
struct HubInstance {
    Graph graph;
    EdgeColoring coloring;
    VertexSet v1, v2;
    int hub;
};

HubInstance make_hub_instance(int half, uint64_t seed) {
    const int n = 2 * half + 1;
    GraphBuilder b(n);
    SplitMix64 rng(seed);
    for (int u = 0; u < half; ++u)
        for (int v = half; v < 2 * half; ++v)
            b.add_edge(u, v);
    for (int u = 0; u < half; ++u)
        for (int v = u + 1; v < half; ++v)
            if (rng.coin())
                b.add_edge(u, v);
    for (int u = half; u < 2 * half; ++u)
        for (int v = u + 1; v < 2 * half; ++v)
            if (rng.coin())
                b.add_edge(u, v);
    for (int v = 0; v < 2 * half; ++v)
        b.add_edge(v, 2 * half);
    HubInstance inst;
    inst.graph = b.freeze();
    inst.hub = 2 * half;
    inst.v1 = VertexSet::range(n, 0, half);
    inst.v2 = VertexSet::range(n, half, 2 * half);
    inst.coloring = EdgeColoring::paint(inst.graph, [&](int u, int v) {
        if (u == 2 * half || v == 2 * half)
            return Color::Blue;
        return (u < half) != (v < half) ? Color::Blue : Color::Red;
    });
    return inst;
}

} // namespace

TEST_CASE("classify_vertices") {
    SUBCASE("blue-cross coloring on a fit graph keeps V_i inside W_i") {
        ToleranceProfile tol;
        tol.multiplier = 2.0;
        FitBuildOptions opts;
        opts.max_retries = 5;
        FitBuildResult fit = build_fit_graph(30, 1, tol, opts);
        REQUIRE(fit.success);
        const Graph& g = fit.graph;
        VertexSet v1 = VertexSet::range(59, 0, 29);
        VertexSet v2 = VertexSet::range(59, 29, 58);
        EdgeColoring c = EdgeColoring::paint(g, [&](int u, int v) {
            bool cross = v1.contains(u) ? v2.contains(v)
                                        : (v2.contains(u) && v1.contains(v));
            return cross ? Color::Blue : Color::Red;
        });
        Classification cls = classify_vertices(g, c, v1, v2);
        for (int v : v1.to_indices())
            CHECK(cls.W1.contains(v));
        for (int v : v2.to_indices())
            CHECK(cls.W2.contains(v));
        CHECK(!cls.special.has_value());
        // disjoint cover
        int total = cls.W1.count() + cls.W2.count() + cls.unclassified.count() +
                    (cls.special ? 1 : 0);
        CHECK(total == g.vertex_count());
        CHECK(!cls.W1.intersects(cls.W2));
    }
    SUBCASE("all-blue coloring empties both W_i") {
        ToleranceProfile tol;
        tol.multiplier = 2.0;
        FitBuildOptions opts;
        opts.max_retries = 5;
        FitBuildResult fit = build_fit_graph(30, 1, tol, opts);
        REQUIRE(fit.success);
        EdgeColoring c = EdgeColoring::uniform(fit.graph, Color::Blue);
        VertexSet v1 = VertexSet::range(59, 0, 29);
        VertexSet v2 = VertexSet::range(59, 29, 58);
        Classification cls = classify_vertices(fit.graph, c, v1, v2);
        CHECK(cls.W1.count() == 0);
        CHECK(cls.W2.count() == 0);
    }
    SUBCASE("a crafted low-degree vertex is reported special") {
        GraphBuilder b(59);
        for (int u = 0; u < 59; ++u)
            for (int v = u + 1; v < 59; ++v)
                if (u != 0 || v <= 2)
                    b.add_edge(u, v);
        Graph g = b.freeze(); // vertex 0 has degree 2
        EdgeColoring c = EdgeColoring::uniform(g, Color::Red);
        VertexSet v1 = VertexSet::range(59, 3, 31);
        VertexSet v2 = VertexSet::range(59, 31, 59);
        Classification cls = classify_vertices(g, c, v1, v2);
        REQUIRE(cls.special.has_value());
        CHECK(*cls.special == 0);
    }
    SUBCASE("overlapping sides are rejected") {
        Graph g = complete_graph(9);
        EdgeColoring c = EdgeColoring::uniform(g, Color::Red);
        CHECK_THROWS_AS(
            classify_vertices(g, c, VertexSet::of(9, {0, 1}), VertexSet::of(9, {1, 2})),
            InputError);
    }
}

TEST_CASE("bipartite path builder") {
    SUBCASE("complete blue pair 5+5 finds any odd length") {
        Graph g = complete_bipartite(5, 5);
        EdgeColoring c = EdgeColoring::uniform(g, Color::Blue);
        VertexSet A = VertexSet::range(10, 0, 5), B = VertexSet::range(10, 5, 10);
        auto r = bipartite_path_builder(g, c, Color::Blue, A, B, 0, 5, 5);
        REQUIRE(r.status == PathBuildStatus::Ok);
        CHECK(r.path.size() == 6);
        CHECK(r.path.front() == 0);
        CHECK(r.path.back() == 5);
    }
    SUBCASE("even length across sides is a parity error") {
        Graph g = complete_bipartite(5, 5);
        EdgeColoring c = EdgeColoring::uniform(g, Color::Blue);
        VertexSet A = VertexSet::range(10, 0, 5), B = VertexSet::range(10, 5, 10);
        auto r = bipartite_path_builder(g, c, Color::Blue, A, B, 0, 5, 4);
        CHECK(r.status == PathBuildStatus::ParityError);
        auto r2 = bipartite_path_builder(g, c, Color::Blue, A, B, 0, 1, 3);
        CHECK(r2.status == PathBuildStatus::ParityError);
    }
    SUBCASE("same-side even paths work") {
        Graph g = complete_bipartite(5, 5);
        EdgeColoring c = EdgeColoring::uniform(g, Color::Blue);
        VertexSet A = VertexSet::range(10, 0, 5), B = VertexSet::range(10, 5, 10);
        auto r = bipartite_path_builder(g, c, Color::Blue, A, B, 0, 4, 6);
        REQUIRE(r.status == PathBuildStatus::Ok);
        CHECK(r.path.size() == 7);
    }
    SUBCASE("length beyond the cap is rejected") {
        Graph g = complete_bipartite(5, 5);
        EdgeColoring c = EdgeColoring::uniform(g, Color::Blue);
        VertexSet A = VertexSet::range(10, 0, 5), B = VertexSet::range(10, 5, 10);
        auto r = bipartite_path_builder(g, c, Color::Blue, A, B, 0, 5, 11);
        CHECK(r.status == PathBuildStatus::LengthCapError);
    }
    SUBCASE("strong-degree violations are reported") {
        GraphBuilder b(complete_bipartite(6, 6));
        for (int v = 6; v < 12; ++v)
            b.remove_edge(0, v); // vertex 0 loses every cross edge
        Graph g = b.freeze();
        EdgeColoring c = EdgeColoring::uniform(g, Color::Blue);
        VertexSet A = VertexSet::range(12, 0, 6), B = VertexSet::range(12, 6, 12);
        auto r = bipartite_path_builder(g, c, Color::Blue, A, B, 1, 6, 3);
        CHECK(r.status == PathBuildStatus::StrongDegreeError);
    }
    SUBCASE("random half-density 30+30 pairs: all odd lengths up to 41, 200 trials") {
        int successes = 0, trials = 0;
        for (uint64_t seed = 0; seed < 10; ++seed) {
            SplitMix64 rng(seed);
            GraphBuilder b(60);
            for (int u = 0; u < 30; ++u)
                for (int v = 30; v < 60; ++v)
                    if (rng.coin())
                        b.add_edge(u, v);
            Graph g = b.freeze();
            EdgeColoring c = EdgeColoring::uniform(g, Color::Blue);
            VertexSet A = VertexSet::range(60, 0, 30), B = VertexSet::range(60, 30, 60);
            for (int len = 3; len <= 41; len += 2) {
                ++trials;
                auto r = bipartite_path_builder(g, c, Color::Blue, A, B, 0, 30, len);
                if (r.status == PathBuildStatus::Ok)
                    ++successes;
            }
        }
        CHECK(trials == 200);
        CHECK(successes == trials);
    }
}

TEST_CASE("rotation extension") {
    SUBCASE("hand-built 6-cycle extends to a 7-cycle") {
        GraphBuilder b(7);
        for (int v = 0; v < 6; ++v)
            b.add_edge(v, (v + 1) % 6);
        b.add_edge(6, 2);
        b.add_edge(6, 5);
        b.add_edge(1, 4); // predecessors of 2 and 5 are adjacent
        Graph red = b.freeze();
        CycleWitness cycle{{0, 1, 2, 3, 4, 5}};
        auto r = rotation_extend(red, cycle, 6, VertexSet::full(7));
        REQUIRE(r.has_value());
        CHECK(r->length() == 7);
        CHECK(r->verify(red));
        std::set<int> verts(r->vertices.begin(), r->vertices.end());
        CHECK(verts == std::set<int>{0, 1, 2, 3, 4, 5, 6});
    }
    SUBCASE("fewer than two cycle neighbors fails") {
        GraphBuilder b(7);
        for (int v = 0; v < 6; ++v)
            b.add_edge(v, (v + 1) % 6);
        b.add_edge(6, 2);
        Graph red = b.freeze();
        CycleWitness cycle{{0, 1, 2, 3, 4, 5}};
        CHECK(!rotation_extend(red, cycle, 6, VertexSet::full(7)).has_value());
    }
    SUBCASE("predecessors outside V_i block the extension") {
        GraphBuilder b(7);
        for (int v = 0; v < 6; ++v)
            b.add_edge(v, (v + 1) % 6);
        b.add_edge(6, 2);
        b.add_edge(6, 5);
        b.add_edge(1, 4);
        Graph red = b.freeze();
        CycleWitness cycle{{0, 1, 2, 3, 4, 5}};
        VertexSet vi = VertexSet::of(7, {0, 2, 3, 5}); // predecessors 1 and 4 excluded
        CHECK(!rotation_extend(red, cycle, 6, vi).has_value());
    }
    SUBCASE("on-cycle vertex is an input error") {
        Graph red = complete_graph(5);
        CycleWitness cycle{{0, 1, 2}};
        CHECK_THROWS_AS(rotation_extend(red, cycle, 1, VertexSet::full(5)), InputError);
    }
    SUBCASE("repeated extension reaches a Hamilton cycle of a dense block") {
        SplitMix64 rng(50);
        Graph red = random_graph(14, rng);
        // densify: add every missing edge on the first 12 vertices
        GraphBuilder b(red);
        for (int u = 0; u < 12; ++u)
            for (int v = u + 1; v < 12; ++v)
                if (!b.adjacent(u, v))
                    b.add_edge(u, v);
        red = b.freeze();
        CycleWitness cycle{{0, 1, 2}};
        VertexSet all = VertexSet::full(14);
        for (int target = 4; target <= 12; ++target) {
            bool grown = false;
            for (int w = 0; w < 12 && !grown; ++w) {
                bool on = false;
                for (int x : cycle.vertices)
                    on |= x == w;
                if (on)
                    continue;
                if (auto next = rotation_extend(red, cycle, w, all)) {
                    cycle = *next;
                    grown = true;
                }
            }
            REQUIRE(grown);
            CHECK(cycle.length() == target);
        }
    }
}

TEST_CASE("blue spectrum from a hub") {
    SUBCASE("crafted half=29 instance yields every length 3..n") {
        HubInstance inst = make_hub_instance(29, 12);
        const int n = 30; // (59+1)/2
        auto res = build_blue_spectrum(inst.graph, inst.coloring, inst.v1, inst.v2, inst.hub);
        CHECK(res.gaps.empty());
        REQUIRE(res.complete(3, n));
        for (const auto& [len, witness] : res.cycles) {
            CHECK(witness.length() == len);
            CHECK(witness.verify(inst.graph));
            for (size_t i = 0; i < witness.vertices.size(); ++i)
                CHECK(inst.coloring.at(witness.vertices[i],
                                       witness.vertices[(i + 1) % witness.vertices.size()]) ==
                      Color::Blue);
        }
    }
    SUBCASE("hub with blue neighbors on one side only is rejected") {
        HubInstance inst = make_hub_instance(10, 3);
        // A V1 vertex as hub: its blue neighbors inside V1 are none.
        CHECK_THROWS_WITH_AS(
            (void)build_blue_spectrum(inst.graph, inst.coloring, inst.v1, inst.v2, 0),
            doctest::Contains("blue neighbors in V1"), InputError);
    }
    SUBCASE("triangle route: hub plus one blue cross edge") {
        HubInstance inst = make_hub_instance(12, 4);
        auto res = build_blue_spectrum(inst.graph, inst.coloring, inst.v1, inst.v2, inst.hub);
        REQUIRE(res.cycles.contains(3));
        CHECK(res.cycles.at(3).vertices[0] == inst.hub);
    }
}

TEST_CASE("blue spectrum endgame variant") {
    // V1 = {0..4}, V2 = {5..9}, s = 10, w = 11; complete blue cross plus the
    // seed edges; everything else absent.
    GraphBuilder b(12);
    for (int u = 0; u < 5; ++u)
        for (int v = 5; v < 10; ++v)
            b.add_edge(u, v);
    b.add_edge(10, 11); // s-w
    b.add_edge(11, 0);  // w-v1
    b.add_edge(10, 0);  // v1-s
    b.add_edge(10, 1);  // v3-s
    Graph g = b.freeze();
    EdgeColoring c = EdgeColoring::uniform(g, Color::Blue);
    VertexSet v1 = VertexSet::range(12, 0, 5), v2 = VertexSet::range(12, 5, 10);
    EndgameSeed seed{10, 11, 0, 5, 1};
    auto res = build_blue_spectrum_endgame(g, c, v1, v2, seed);
    const int n = 6; // (12+1)/2 rounded: 6
    REQUIRE(res.complete(3, n));
    CHECK(res.cycles.at(3).vertices == std::vector<int>{10, 11, 0});
    CHECK(res.cycles.at(5).vertices == std::vector<int>{10, 11, 0, 5, 1});
    for (const auto& [len, witness] : res.cycles)
        CHECK(witness.verify(g));

    SUBCASE("missing seed edge is reported") {
        GraphBuilder b2(g);
        b2.remove_edge(10, 1);
        Graph g2 = b2.freeze();
        EdgeColoring c2 = EdgeColoring::uniform(g2, Color::Blue);
        CHECK_THROWS_WITH_AS((void)build_blue_spectrum_endgame(g2, c2, v1, v2, seed),
                             doctest::Contains("v3-s"), InputError);
    }
}

TEST_CASE("red pancyclic builder") {
    SUBCASE("red-complete block of 50 gives every length") {
        Graph g = complete_graph(51);
        EdgeColoring c = EdgeColoring::uniform(g, Color::Red);
        VertexSet wi = VertexSet::range(51, 0, 50), vi = VertexSet::range(51, 0, 50);
        auto res = build_red_pancyclic(g, c, wi, vi);
        CHECK(res.gaps.empty());
        REQUIRE(res.complete(3, 50));
        for (const auto& [len, witness] : res.cycles) {
            CHECK(witness.length() == len);
            CHECK(witness.verify(g));
            for (int x : witness.vertices)
                CHECK(wi.contains(x));
        }
    }
    SUBCASE("crafted instance: classification then red pancyclicity") {
        HubInstance inst = make_hub_instance(29, 21);
        Classification cls =
            classify_vertices(inst.graph, inst.coloring, inst.v1, inst.v2);
        REQUIRE(cls.W1.count() >= 29);
        auto res = build_red_pancyclic(inst.graph, inst.coloring, cls.W1, inst.v1);
        CHECK(res.gaps.empty());
        CHECK(res.complete(3, cls.W1.count()));
    }
    SUBCASE("external vertex with two red neighbors adds length |W_i|+1") {
        GraphBuilder b(11);
        for (int u = 0; u < 10; ++u)
            for (int v = u + 1; v < 10; ++v)
                b.add_edge(u, v);
        b.add_edge(10, 0);
        b.add_edge(10, 5);
        Graph g = b.freeze();
        EdgeColoring c = EdgeColoring::uniform(g, Color::Red);
        VertexSet wi = VertexSet::range(11, 0, 10), vi = VertexSet::range(11, 0, 10);
        PancyclicOptions opts;
        opts.external_vertex = 10;
        auto res = build_red_pancyclic(g, c, wi, vi, SideThresholds{}, opts);
        REQUIRE(res.complete(3, 11));
        CHECK(res.cycles.at(11).length() == 11);
    }
    SUBCASE("precondition violations name the vertex") {
        Graph g = complete_graph(21);
        EdgeColoring c = EdgeColoring::uniform(g, Color::Blue); // no red at all
        CHECK_THROWS_WITH_AS((void)build_red_pancyclic(g, c, VertexSet::range(21, 0, 20),
                                                       VertexSet::range(21, 0, 20)),
                             doctest::Contains("red neighbors"), InputError);
    }
}

TEST_CASE("fit-graph variant with a repurposed hub needs a smaller multiplier") {
    // On an n-fit graph the hub's blue degree per side is about (n+1)/2,
    // while the threshold n^0.9 exceeds it for every desk-scale n; the
    // documented multiplier knob covers the gap.
    ToleranceProfile tol;
    tol.multiplier = 2.0;
    FitBuildOptions fopts;
    fopts.max_retries = 5;
    FitBuildResult fit = build_fit_graph(60, 1, tol, fopts);
    REQUIRE(fit.success);
    const Graph& g = fit.graph;
    const int hub = 118;
    VertexSet v1 = VertexSet::range(119, 0, 59), v2 = VertexSet::range(119, 59, 118);
    EdgeColoring c = EdgeColoring::paint(g, [&](int u, int v) {
        if (u == hub || v == hub)
            return Color::Blue;
        bool cross = v1.contains(u) ? v2.contains(v) : (v2.contains(u) && v1.contains(v));
        return cross ? Color::Blue : Color::Red;
    });
    SideThresholds thr;
    thr.multiplier = 0.7;

    CHECK_THROWS_AS((void)build_blue_spectrum(g, c, v1, v2, hub, SideThresholds{}), InputError);

    auto blue = build_blue_spectrum(g, c, v1, v2, hub, thr);
    CHECK(blue.gaps.empty());
    CHECK(blue.complete(3, 60));

    Classification cls = classify_vertices(g, c, v1, v2, thr);
    for (int v : v1.to_indices())
        CHECK(cls.W1.contains(v));
    auto red = build_red_pancyclic(g, c, cls.W1, v1, thr);
    CHECK(red.gaps.empty());
    CHECK(red.complete(3, cls.W1.count()));
}
