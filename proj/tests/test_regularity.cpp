#include <doctest.h>

#include "cyclefit/coloring.hpp"
#include "cyclefit/named_graphs.hpp"
#include "cyclefit/matching.hpp"
#include "cyclefit/regularity.hpp"
#include "testutil.hpp"

using namespace cyclefit;

namespace {

Graph random_bipartite_half(int a, int b, SplitMix64& rng) {
    GraphBuilder g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            if (rng.coin())
                g.add_edge(u, v);
    return g.freeze();
}

} // namespace

TEST_CASE("pair density examples") {
    SUBCASE("complete bipartite pair has density 1") {
        Graph g = complete_bipartite(4, 6);
        Rational d = pair_density(g, VertexSet::range(10, 0, 4), VertexSet::range(10, 4, 10));
        CHECK(d == Rational(1, 1));
    }
    SUBCASE("edgeless pair has density 0") {
        Graph g = empty_graph(8);
        Rational d = pair_density(g, VertexSet::range(8, 0, 4), VertexSet::range(8, 4, 8));
        CHECK(d == Rational(0, 1));
    }
    SUBCASE("half density is the exact rational 1/2") {
        GraphBuilder b(8);
        int count = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = 4; v < 8; ++v)
                if (count++ % 2 == 0)
                    b.add_edge(u, v);
        Rational d = pair_density(b.freeze(), VertexSet::range(8, 0, 4),
                                  VertexSet::range(8, 4, 8));
        CHECK(d == Rational(1, 2));
    }
    SUBCASE("validation") {
        Graph g = complete_graph(6);
        CHECK_THROWS_AS(pair_density(g, VertexSet::of(6, {0, 1}), VertexSet::of(6, {1, 2})),
                        InputError);
        CHECK_THROWS_AS(pair_density(g, VertexSet(6), VertexSet::of(6, {1})), InputError);
    }
    SUBCASE("symmetry on random pairs") {
        SplitMix64 rng(17);
        for (int trial = 0; trial < 50; ++trial) {
            Graph g = random_graph(12, rng);
            VertexSet v1 = VertexSet::range(12, 0, 6), v2 = VertexSet::range(12, 6, 12);
            CHECK(pair_density(g, v1, v2) == pair_density(g, v2, v1));
        }
    }
}

TEST_CASE("exhaustive regularity checks") {
    SUBCASE("complete bipartite pair is regular at any eps") {
        Graph g = complete_bipartite(6, 6);
        auto v = check_regular_pair(g, VertexSet::range(12, 0, 6), VertexSet::range(12, 6, 12),
                                    0.1);
        CHECK(v.kind == RegularityKind::Regular);
        CHECK(v.max_deviation == 0.0);
    }
    SUBCASE("a planted empty box at half density is irregular") {
        // Half-density pair with an empty ceil(eps*8)=2x2 box planted.
        SplitMix64 rng(2);
        Graph g;
        for (;;) {
            Graph candidate = random_bipartite_half(8, 8, rng);
            GraphBuilder b(candidate);
            for (int u : {0, 1})
                for (int v : {8, 9})
                    if (b.adjacent(u, v))
                        b.remove_edge(u, v);
            g = b.freeze();
            double d = pair_density(g, VertexSet::range(16, 0, 8), VertexSet::range(16, 8, 16))
                           .to_double();
            if (d > 0.4 && d < 0.6)
                break;
        }
        auto v = check_regular_pair(g, VertexSet::range(16, 0, 8), VertexSet::range(16, 8, 16),
                                    0.25);
        CHECK(v.kind == RegularityKind::Irregular);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->deviation > 0.25);
    }
    SUBCASE("guard rejects oversized exhaustive requests") {
        Graph g = complete_bipartite(16, 16);
        CHECK_THROWS_AS(check_regular_pair(g, VertexSet::range(32, 0, 16),
                                           VertexSet::range(32, 16, 32), 0.25),
                        InputError);
    }
}

TEST_CASE("exhaustive verdicts match an independent brute-force reimplementation") {
    SplitMix64 rng(606);
    int irregular_count = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_bipartite_half(8, 8, rng);
        std::vector<int> v1(8), v2(8);
        for (int i = 0; i < 8; ++i) {
            v1[static_cast<size_t>(i)] = i;
            v2[static_cast<size_t>(i)] = 8 + i;
        }
        double eps = 0.25 + 0.05 * static_cast<double>(rng.next_below(5));
        auto mine = check_regular_pair(g, VertexSet::range(16, 0, 8), VertexSet::range(16, 8, 16),
                                       eps);
        auto oracle = testutil::naive_check_regular_pair(g, v1, v2, eps);
        CHECK((mine.kind == RegularityKind::Regular) == oracle.regular);
        CHECK(mine.max_deviation == doctest::Approx(oracle.max_deviation).epsilon(1e-9));
        if (mine.kind == RegularityKind::Irregular)
            ++irregular_count;
    }
    CHECK(irregular_count > 0); // the corpus exercises both verdicts
}

TEST_CASE("exhaustive verdict is self-dual under side swap") {
    SplitMix64 rng(607);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_bipartite_half(7, 7, rng);
        VertexSet v1 = VertexSet::range(14, 0, 7), v2 = VertexSet::range(14, 7, 14);
        auto a = check_regular_pair(g, v1, v2, 0.3);
        auto b = check_regular_pair(g, v2, v1, 0.3);
        CHECK(a.kind == b.kind);
        CHECK(a.max_deviation == doctest::Approx(b.max_deviation).epsilon(1e-12));
        if (a.witness && b.witness) {
            std::multiset<int> sa{a.witness->W1.count(), a.witness->W2.count()};
            std::multiset<int> sb{b.witness->W1.count(), b.witness->W2.count()};
            CHECK(sa == sb);
        }
    }
}

TEST_CASE("sampled mode never certifies") {
    Graph g = complete_bipartite(20, 20);
    RegularityMode mode{false, 500, 9};
    auto v = check_regular_pair(g, VertexSet::range(40, 0, 20), VertexSet::range(40, 20, 40), 0.1,
                                mode);
    CHECK(v.kind == RegularityKind::HeuristicRegular);
    // A planted empty half on one side must be caught by sampling.
    GraphBuilder b(complete_bipartite(20, 20));
    for (int u = 0; u < 10; ++u)
        for (int v2 = 20; v2 < 40; ++v2)
            b.remove_edge(u, v2);
    auto w = check_regular_pair(b.freeze(), VertexSet::range(40, 0, 20),
                                VertexSet::range(40, 20, 40), 0.1, mode);
    CHECK(w.kind == RegularityKind::Irregular);
    REQUIRE(w.witness.has_value());
    CHECK(w.witness->deviation > 0.1);
}

TEST_CASE("strongly regular trim") {
    SUBCASE("complete pair is untouched") {
        Graph g = complete_bipartite(6, 6);
        auto r = strongly_regular_trim(g, VertexSet::range(12, 0, 6), VertexSet::range(12, 6, 12),
                                       0.1);
        CHECK(r.W1.count() == 6);
        CHECK(r.W2.count() == 6);
        CHECK(r.size_guarantee_met);
    }
    SUBCASE("an isolated vertex is removed") {
        GraphBuilder b(complete_bipartite(6, 6));
        for (int v = 6; v < 12; ++v)
            b.remove_edge(0, v);
        auto r = strongly_regular_trim(b.freeze(), VertexSet::range(12, 0, 6),
                                       VertexSet::range(12, 6, 12), 0.1);
        CHECK(r.W1.count() == 5);
        CHECK(!r.W1.contains(0));
        CHECK(r.W2.count() == 6);
    }
    SUBCASE("random half-density 40+40 keeps at least 32 per side") {
        SplitMix64 rng(11);
        for (int trial = 0; trial < 10; ++trial) {
            Graph g = random_bipartite_half(40, 40, rng);
            auto r = strongly_regular_trim(g, VertexSet::range(80, 0, 40),
                                           VertexSet::range(80, 40, 80), 0.1);
            CHECK(r.W1.count() >= 32);
            CHECK(r.W2.count() >= 32);
            CHECK(r.size_guarantee_met);
        }
    }
    SUBCASE("idempotent") {
        SplitMix64 rng(12);
        for (int trial = 0; trial < 20; ++trial) {
            Graph g = random_bipartite_half(15, 15, rng);
            auto r = strongly_regular_trim(g, VertexSet::range(30, 0, 15),
                                           VertexSet::range(30, 15, 30), 0.2);
            auto again = strongly_regular_trim(g, r.W1, r.W2, 0.2);
            CHECK(again.W1 == r.W1);
            CHECK(again.W2 == r.W2);
            CHECK(again.rounds == 0);
        }
    }
    SUBCASE("edgeless pair is vacuously stable, empty inputs are rejected") {
        // With zero cross edges the degree threshold is zero, so nothing is
        // removed and the pair survives trivially.
        Graph g = empty_graph(10);
        auto r = strongly_regular_trim(g, VertexSet::range(10, 0, 5),
                                       VertexSet::range(10, 5, 10), 0.1);
        CHECK(r.W1.count() == 5);
        CHECK(r.rounds == 0);
        CHECK_THROWS_AS(strongly_regular_trim(g, VertexSet(10), VertexSet::range(10, 5, 10), 0.1),
                        InputError);
    }
}

TEST_CASE("partition files") {
    Partition p;
    p.parts.push_back(VertexSet::of(6, {0, 2, 4}));
    p.parts.push_back(VertexSet::of(6, {1, 3, 5}));
    std::string text = to_partition_file(p);
    Partition back = from_partition_file(6, text);
    CHECK(back.parts.size() == 2);
    CHECK(back.parts[0] == p.parts[0]);

    CHECK_THROWS_AS(from_partition_file(6, "part 1: 0 1 2\n"), InputError); // not covering
    CHECK_THROWS_AS(from_partition_file(4, "part 1: 0 1 2\npart 2: 3\n"), InputError); // sizes
    CHECK_THROWS_AS(from_partition_file(4, "part 1: 0 1\npart 2: 1 2 3\n"), InputError);
}

TEST_CASE("reduced graph majority and draw rules") {
    // Parts of size 5; exactly controlled cross colors.
    const int n = 10;
    Graph g = complete_bipartite(5, 5);
    Partition p;
    p.parts.push_back(VertexSet::range(n, 0, 5));
    p.parts.push_back(VertexSet::range(n, 5, 10));

    SUBCASE("majority red") {
        int reds = 15; // of 25
        int counter = 0;
        EdgeColoring c = EdgeColoring::paint(g, [&](int, int) {
            return counter++ < reds ? Color::Red : Color::Blue;
        });
        ReducedGraph r = reduced_graph(g, c, p, 0.9);
        CHECK(r.at(0, 1).edge == ReducedEdge::Red);
        CHECK(r.at(0, 1).red_density == Rational(15, 25));
    }
    SUBCASE("majority blue") {
        int reds = 10;
        int counter = 0;
        EdgeColoring c = EdgeColoring::paint(g, [&](int, int) {
            return counter++ < reds ? Color::Red : Color::Blue;
        });
        ReducedGraph r = reduced_graph(g, c, p, 0.9);
        CHECK(r.at(0, 1).edge == ReducedEdge::Blue);
    }
    SUBCASE("exact draw goes to red") {
        // 24 cross edges, 12 red and 12 blue, one edge removed for evenness.
        GraphBuilder b(g);
        b.remove_edge(4, 9);
        Graph g2 = b.freeze();
        int counter = 0;
        EdgeColoring c = EdgeColoring::paint(g2, [&](int, int) {
            return counter++ < 12 ? Color::Red : Color::Blue;
        });
        ReducedGraph r = reduced_graph(g2, c, p, 0.9);
        CHECK(r.at(0, 1).red_cross == 12);
        CHECK(r.at(0, 1).blue_cross == 12);
        CHECK(r.at(0, 1).edge == ReducedEdge::Red);
    }
    SUBCASE("irregular pairs are absent") {
        // Make red wildly irregular between the parts: a full empty quadrant.
        EdgeColoring c = EdgeColoring::paint(g, [&](int u, int v) {
            (void)v;
            return u < 3 ? Color::Red : Color::Blue;
        });
        ReducedGraph r = reduced_graph(g, c, p, 0.05);
        CHECK(r.at(0, 1).edge == ReducedEdge::Absent);
    }
    SUBCASE("majority rule quantified over random colorings") {
        SplitMix64 rng(77);
        for (int trial = 0; trial < 30; ++trial) {
            EdgeColoring c = testutil::random_coloring(g, rng);
            ReducedGraph r = reduced_graph(g, c, p, 0.95);
            const ReducedPair& info = r.at(0, 1);
            if (info.edge != ReducedEdge::Absent)
                CHECK((info.edge == ReducedEdge::Red) == (info.red_cross >= info.blue_cross));
        }
    }
}

TEST_CASE("property M_t") {
    SUBCASE("C5 with t=4") {
        auto cert = property_mt(cycle_graph(5), 4.0);
        REQUIRE(cert.has_value());
        CHECK(cert->saturated == 4);
        CHECK(cert->matching.size() == 2);
        CHECK(cert->odd_cycle.length() == 5);
    }
    SUBCASE("C6 has no certificate (bipartite)") {
        CHECK(!property_mt(cycle_graph(6), 2.0).has_value());
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(property_mt(cycle_graph(5), 0.0), InputError);
    }
    SUBCASE("matches exhaustive matching enumeration on 500 random graphs") {
        SplitMix64 rng(2718);
        for (int trial = 0; trial < 500; ++trial) {
            int n = 3 + static_cast<int>(rng.next_below(10)); // up to 12
            Graph g = random_graph(n, rng);
            // oracle: per non-bipartite component, exhaustive max matching
            int best = 0;
            for (const auto& comp : components_bipartiteness(g)) {
                if (comp.bipartite)
                    continue;
                std::vector<int> verts = comp.members.to_indices();
                std::vector<int> local(static_cast<size_t>(n), -1);
                for (size_t i = 0; i < verts.size(); ++i)
                    local[static_cast<size_t>(verts[i])] = static_cast<int>(i);
                GraphBuilder b(static_cast<int>(verts.size()));
                for (size_t i = 0; i < verts.size(); ++i)
                    for (int u : g.neighbors(verts[i]))
                        if (local[static_cast<size_t>(u)] > static_cast<int>(i))
                            b.add_edge(static_cast<int>(i), local[static_cast<size_t>(u)]);
                best = std::max(best, 2 * testutil::naive_max_matching_size(b.freeze()));
            }
            for (int t = 1; t <= n; ++t) {
                auto cert = property_mt(g, static_cast<double>(t));
                CHECK(cert.has_value() == (best >= t));
                if (cert) {
                    CHECK(cert->saturated >= t);
                    CHECK(cert->odd_cycle.verify(g));
                    CHECK(is_matching(g, cert->matching));
                }
            }
        }
    }
    SUBCASE("monotone in t") {
        SplitMix64 rng(111);
        for (int trial = 0; trial < 50; ++trial) {
            Graph g = random_graph(10, rng);
            for (int t = 2; t <= 10; ++t)
                if (property_mt(g, static_cast<double>(t)))
                    CHECK(property_mt(g, static_cast<double>(t - 1)).has_value());
        }
    }
}

TEST_CASE("find_induced_bipartite") {
    SUBCASE("blocking coloring on K8 yields the blue K_{4,4}") {
        auto [g, c] = color_bipartite_blocking(5, 3);
        auto r = find_induced_bipartite(g, c, Color::Blue, 4);
        REQUIRE(r.has_value());
        CHECK(!r->heuristic);
        CHECK(r->W1.count() >= 4);
        CHECK(r->W2.count() >= 4);
        // verify: no blue edge inside either side
        for (const auto& side : {r->W1, r->W2}) {
            auto idx = side.to_indices();
            for (size_t i = 0; i < idx.size(); ++i)
                for (size_t j = i + 1; j < idx.size(); ++j)
                    if (g.adjacent(idx[i], idx[j]))
                        CHECK(c.at(idx[i], idx[j]) == Color::Red);
        }
    }
    SUBCASE("all-blue K6 has no large blue-bipartite split") {
        Graph g = complete_graph(6);
        EdgeColoring c = EdgeColoring::uniform(g, Color::Blue);
        CHECK(!find_induced_bipartite(g, c, Color::Blue, 2).has_value());
        CHECK(find_induced_bipartite(g, c, Color::Blue, 1).has_value()); // single edge
    }
    SUBCASE("heuristic path on larger hosts is flagged") {
        auto [g, c] = color_bipartite_blocking(12, 3); // 22 vertices
        auto r = find_induced_bipartite(g, c, Color::Blue, 8);
        REQUIRE(r.has_value());
        CHECK(r->heuristic);
        CHECK(std::min(r->W1.count(), r->W2.count()) >= 8);
    }
}
