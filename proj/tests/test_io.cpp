#include <doctest.h>

#include "cyclefit/graph_io.hpp"
#include "cyclefit/named_graphs.hpp"
#include "testutil.hpp"

using namespace cyclefit;

TEST_CASE("graph6 encodes K5 to the standard string") {
    CHECK(to_graph6(complete_graph(5)) == "D~{");
}

TEST_CASE("graph6 known small strings decode") {
    // 'A_' is the single edge on two vertices, '@' the one-vertex graph.
    Graph two = from_graph6("A_");
    CHECK(two.vertex_count() == 2);
    CHECK(two.adjacent(0, 1));
    Graph one = from_graph6("@");
    CHECK(one.vertex_count() == 1);
    CHECK(one.edge_count() == 0);
}

TEST_CASE("graph6 header prefix is accepted") {
    Graph g = from_graph6(">>graph6<<D~{\n");
    CHECK(g == complete_graph(5));
}

TEST_CASE("graph6 round trips") {
    SplitMix64 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(80));
        Graph g = random_graph(n, rng);
        Graph back = from_graph6(to_graph6(g));
        CHECK(back == g);
    }
    // exercise the 3-byte size header
    Graph big = cycle_graph(100);
    CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("graph6 strict validation") {
    CHECK_THROWS_AS(from_graph6(""), InputError);
    CHECK_THROWS_AS(from_graph6("D~{extra"), InputError);
    CHECK_THROWS_AS(from_graph6("D~"), InputError);
    CHECK_THROWS_AS(from_graph6(std::string(1, static_cast<char>(20))), InputError);
    // nonzero padding bits: C3 on 3 vertices uses 3 bits, pad must be zero
    std::string bad = "B";
    bad.push_back(static_cast<char>(63 + 0b111111));
    CHECK_THROWS_AS(from_graph6(bad), InputError);
}

TEST_CASE("edge list round trips and validates") {
    Graph g = petersen_graph();
    std::string text = to_edge_list(g);
    CHECK(from_edge_list(text) == g);

    CHECK_THROWS_AS(from_edge_list("3"), InputError);
    CHECK_THROWS_AS(from_edge_list("3 1\n1 0\n"), InputError);      // not normalized
    CHECK_THROWS_AS(from_edge_list("3 2\n0 1\n0 1\n"), InputError); // duplicate
    CHECK_THROWS_AS(from_edge_list("3 2\n0 2\n0 1\n"), InputError); // not ascending
    CHECK_THROWS_AS(from_edge_list("3 1\n0 1\n2 1\n"), InputError); // trailing content
    CHECK_THROWS_AS(from_edge_list("3 2\n0 1\n"), InputError);      // truncated
}

TEST_CASE("file helpers choose the format by extension") {
    Graph g = cycle_graph(6);
    save_graph(g, "/tmp/cyclefit_test_graph.g6");
    CHECK(load_graph("/tmp/cyclefit_test_graph.g6") == g);
    save_graph(g, "/tmp/cyclefit_test_graph.edges");
    CHECK(load_graph("/tmp/cyclefit_test_graph.edges") == g);
    CHECK_THROWS_AS(load_graph("/tmp/cyclefit_missing_file.g6"), InputError);
}
