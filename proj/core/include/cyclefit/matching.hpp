#pragma once

#include <vector>

#include "cyclefit/graph.hpp"

namespace cyclefit {

// Maximum cardinality matching in a general graph; Edmonds' blossom
// algorithm with base-array contraction, O(V^3).
std::vector<Edge> maximum_matching(const Graph& g);

// True iff `matching` is a matching of g (disjoint edges of g).
bool is_matching(const Graph& g, const std::vector<Edge>& matching);

} // namespace cyclefit
