#pragma once

#include "cyclefit/graph.hpp"
#include "cyclefit/prng.hpp"

namespace cyclefit {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b); // parts {0..a-1} and {a..a+b-1}
Graph empty_graph(int n);
Graph petersen_graph();

// G(n, 1/2): each pair independently with the given generator.
Graph random_graph(int n, SplitMix64& rng);

// Uniform graph with exactly m edges.
Graph random_graph_with_edges(int n, long long m, SplitMix64& rng);

} // namespace cyclefit
