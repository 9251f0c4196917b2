#include <doctest.h>

#include "cyclefit/matching.hpp"
#include "cyclefit/named_graphs.hpp"
#include "testutil.hpp"

using namespace cyclefit;

TEST_CASE("matching on known graphs") {
    CHECK(maximum_matching(cycle_graph(5)).size() == 2);
    CHECK(maximum_matching(cycle_graph(6)).size() == 3);
    CHECK(maximum_matching(complete_graph(4)).size() == 2);
    CHECK(maximum_matching(complete_graph(7)).size() == 3);
    CHECK(maximum_matching(petersen_graph()).size() == 5);
    CHECK(maximum_matching(empty_graph(5)).empty());
    CHECK(maximum_matching(path_graph(7)).size() == 3);
}

TEST_CASE("blossom case: two triangles joined by a path") {
    // Odd components force blossom contractions.
    GraphBuilder b(8);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(2, 0);
    b.add_edge(2, 3);
    b.add_edge(3, 4);
    b.add_edge(4, 5);
    b.add_edge(5, 6);
    b.add_edge(6, 7);
    b.add_edge(7, 5);
    Graph g = b.freeze();
    auto m = maximum_matching(g);
    CHECK(is_matching(g, m));
    CHECK(m.size() == 4);
}

TEST_CASE("matching matches the exhaustive oracle on 500 random graphs") {
    SplitMix64 rng(31415);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(11)); // up to 12 vertices
        Graph g = random_graph(n, rng);
        auto m = maximum_matching(g);
        CHECK(is_matching(g, m));
        CHECK(static_cast<int>(m.size()) == testutil::naive_max_matching_size(g));
    }
}
