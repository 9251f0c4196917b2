#include <doctest.h>

#include "cyclefit/coloring.hpp"
#include "cyclefit/named_graphs.hpp"
#include "testutil.hpp"

using namespace cyclefit;

TEST_CASE("coloring construction and partition of the edge set") {
    Graph g = complete_graph(5);
    EdgeColoring c = EdgeColoring::paint(g, [](int u, int v) {
        return (u + v) % 2 == 0 ? Color::Red : Color::Blue;
    });
    CHECK(c.count(Color::Red) + c.count(Color::Blue) == g.edge_count());
    Graph red = c.subgraph(Color::Red);
    Graph blue = c.subgraph(Color::Blue);
    CHECK(red.edge_count() + blue.edge_count() == g.edge_count());
    CHECK(c.at(0, 2) == Color::Red);
    CHECK(c.at(0, 1) == Color::Blue);
    CHECK_THROWS_AS(c.at(0, 0), InputError);
    CHECK_THROWS_AS(EdgeColoring(g, std::vector<Color>(3, Color::Red)), InputError);
}

TEST_CASE("coloring file round trip and bijection checks") {
    Graph g = petersen_graph();
    SplitMix64 rng(8);
    EdgeColoring c = testutil::random_coloring(g, rng);
    EdgeColoring back = from_coloring_file(g, to_coloring_file(c));
    CHECK(back == c);

    CHECK_THROWS_AS(from_coloring_file(g, "colors 3\n"), InputError);
    CHECK_THROWS_AS(from_coloring_file(g, "colors 2\n0 1 R\n"), InputError); // missing edges
    std::string dup = "colors 2\n";
    for (const auto& [u, v] : g.edges())
        dup += std::to_string(u) + " " + std::to_string(v) + " R\n";
    CHECK_THROWS_AS(from_coloring_file(g, dup + "0 1 B\n"), InputError); // duplicate
    CHECK_THROWS_AS(from_coloring_file(g, "colors 2\n0 3 R\n"), InputError); // non-edge
}

TEST_CASE("blocking coloring examples") {
    SUBCASE("n=5, k=3: blue side is K_{4,4}, red components have size 4") {
        auto [g, c] = color_bipartite_blocking(5, 3);
        CHECK(g.vertex_count() == 8);
        Graph blue = c.subgraph(Color::Blue);
        CHECK(blue.edge_count() == 16);
        for (const auto& comp : components_bipartiteness(blue))
            CHECK(comp.bipartite);
        Graph red = c.subgraph(Color::Red);
        auto red_comps = components_bipartiteness(red);
        REQUIRE(red_comps.size() == 2);
        CHECK(red_comps[0].members.count() == 4);
        CHECK(red_comps[1].members.count() == 4);
        CHECK(verify_avoidance(g, c, AvoidanceSpec::red_and_single_blue(5, 3)).clean);
    }
    SUBCASE("n=3, k=3 gives K4 with blue K_{2,2}") {
        auto [g, c] = color_bipartite_blocking(3, 3);
        CHECK(g.vertex_count() == 4);
        CHECK(c.subgraph(Color::Blue).edge_count() == 4);
        CHECK(verify_avoidance(g, c, AvoidanceSpec::red_and_single_blue(3, 3)).clean);
    }
    SUBCASE("all odd k up to n stay clean") {
        for (int n = 3; n <= 8; ++n)
            for (int k = 3; k <= n; k += 2) {
                auto [g, c] = color_bipartite_blocking(n, k);
                CHECK(verify_avoidance(g, c, AvoidanceSpec::red_and_single_blue(n, k)).clean);
                CHECK(verify_avoidance(g, c, AvoidanceSpec::red_and_all_blue_odd(n)).clean);
            }
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(color_bipartite_blocking(5, 4), InputError);
        CHECK_THROWS_AS(color_bipartite_blocking(5, 7), InputError);
        CHECK_THROWS_AS(color_bipartite_blocking(2, 3), InputError);
    }
}

TEST_CASE("extremal lower-bound coloring") {
    SUBCASE("C9 with n=5: blue subgraph bipartite between a 4-set and 5-set") {
        Graph g = cycle_graph(9);
        auto res = color_extremal_lower_bound(g, 5);
        REQUIRE(res.has_value());
        CHECK(res->side_prime.count() == 4);
        Graph blue = res->coloring.subgraph(Color::Blue);
        for (const auto& comp : components_bipartiteness(blue))
            CHECK(comp.bipartite);
        CHECK(verify_avoidance(g, res->coloring, AvoidanceSpec::red_and_all_blue_odd(5)).clean);
    }
    SUBCASE("inapplicable when the minimum degree exceeds n") {
        Graph g = complete_graph(9);
        CHECK(!color_extremal_lower_bound(g, 5).has_value());
    }
    SUBCASE("wrong vertex count is an input error") {
        CHECK_THROWS_AS(color_extremal_lower_bound(complete_graph(8), 5), InputError);
    }
    SUBCASE("pivot keeps at most one red edge, clean on a sparse corpus") {
        SplitMix64 rng(20240);
        for (int n = 4; n <= 8; ++n) {
            long long cap = (static_cast<long long>(n + 1) * (2 * n - 1) + 1) / 2;
            for (int trial = 0; trial < 25; ++trial) {
                long long m = static_cast<long long>(rng.next_below(static_cast<uint64_t>(cap)));
                Graph g = random_graph_with_edges(2 * n - 1, m, rng);
                auto res = color_extremal_lower_bound(g, n);
                REQUIRE(res.has_value()); // forced by counting
                int red_at_pivot = 0;
                for (int u : g.neighbors(res->pivot))
                    if (res->coloring.at(res->pivot, u) == Color::Red)
                        ++red_at_pivot;
                CHECK(red_at_pivot <= 1);
                CHECK(verify_avoidance(g, res->coloring,
                                       AvoidanceSpec::red_and_all_blue_odd(n),
                                       SearchLimits::unlimited())
                          .clean);
            }
        }
    }
}

TEST_CASE("monochromatic cycle search") {
    SUBCASE("all-red K6 has a red triangle") {
        Graph g = complete_graph(6);
        EdgeColoring c = EdgeColoring::uniform(g, Color::Red);
        auto r = monochromatic_cycle(g, c, Color::Red, 3);
        CHECK(r.status == SearchStatus::Found);
        auto b = monochromatic_cycle(g, c, Color::Blue, 3);
        CHECK(b.status == SearchStatus::None);
    }
    SUBCASE("blocking coloring has no blue odd cycle of any length") {
        auto [g, c] = color_bipartite_blocking(6, 5);
        for (int len = 3; len <= 9; len += 2)
            CHECK(monochromatic_cycle(g, c, Color::Blue, len).status == SearchStatus::None);
    }
    SUBCASE("agrees with brute-force color-subgraph enumeration on a corpus") {
        SplitMix64 rng(555);
        int done = 0;
        for (int trial = 0; trial < 500; ++trial) {
            Graph g = random_graph(8, rng);
            EdgeColoring c = testutil::random_coloring(g, rng);
            for (Color color : {Color::Red, Color::Blue}) {
                std::set<int> oracle =
                    testutil::all_simple_cycle_lengths(c.subgraph(color));
                for (int len = 3; len <= 8; ++len) {
                    auto r = monochromatic_cycle(g, c, color, len, SearchLimits::unlimited());
                    CHECK((r.status == SearchStatus::Found) == (oracle.count(len) > 0));
                    ++done;
                }
            }
        }
        CHECK(done == 500 * 2 * 6);
    }
}

TEST_CASE("verify_avoidance") {
    SUBCASE("all-red K9 violates red C5 with a witness") {
        Graph g = complete_graph(9);
        EdgeColoring c = EdgeColoring::uniform(g, Color::Red);
        auto verdict = verify_avoidance(g, c, AvoidanceSpec::red_and_all_blue_odd(5));
        CHECK(!verdict.clean);
        REQUIRE(verdict.violation.has_value());
        CHECK(verdict.violation->first == Color::Red);
        CHECK(verdict.violation->second.length() == 5);
        CHECK(verdict.violation->second.verify(g));
    }
    SUBCASE("budget exhaustion throws instead of reporting clean") {
        Graph g = complete_graph(12);
        EdgeColoring c = EdgeColoring::uniform(g, Color::Red);
        CHECK_THROWS_AS(
            verify_avoidance(g, c, AvoidanceSpec::red_and_single_blue(11, 3), SearchLimits{1}),
            BudgetExhausted);
    }
    SUBCASE("monotone: adding blue-forbidden lengths never cleans a violation") {
        SplitMix64 rng(91);
        for (int trial = 0; trial < 100; ++trial) {
            Graph g = random_graph(8, rng);
            EdgeColoring c = testutil::random_coloring(g, rng);
            auto all = verify_avoidance(g, c, AvoidanceSpec::red_and_all_blue_odd(4));
            for (int k = 3; k <= 7; k += 2) {
                auto single = verify_avoidance(g, c, AvoidanceSpec::red_and_single_blue(4, k));
                if (!single.clean)
                    CHECK(!all.clean); // all-odd forbids a superset
            }
        }
    }
}
