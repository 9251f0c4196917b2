#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cyclefit/graph.hpp"

namespace cyclefit {

struct SearchLimits {
    uint64_t node_cap = 50'000'000;

    static SearchLimits unlimited() { return SearchLimits{UINT64_MAX}; }
};

enum class SearchStatus { Found, None, Unknown };

// `None` is only reported after an exhaustive search; running out of budget
// yields `Unknown`, never a silent downgrade.
struct CycleSearchResult {
    SearchStatus status = SearchStatus::Unknown;
    std::optional<CycleWitness> witness;
    uint64_t nodes_expanded = 0;
};

// Exact search for a cycle of exactly `length` edges. Depth-first path
// extension anchored at each vertex in increasing id (the anchor is the
// cycle's minimum vertex), pruned by BFS distance layers back to the anchor.
CycleSearchResult find_cycle_of_length(const Graph& g, int length, SearchLimits limits = {});

struct SpectrumEntry {
    SearchStatus status = SearchStatus::Unknown;
    std::optional<CycleWitness> witness;
};

// One entry per length in 3..length_max; `limits` applies per length.
std::map<int, SpectrumEntry> cycle_spectrum(const Graph& g, int length_max,
                                            SearchLimits limits = {});

struct ComponentReport {
    VertexSet members;
    bool bipartite = true;
    std::optional<CycleWitness> odd_cycle; // present iff not bipartite
};

// Connected components in order of their minimum vertex, with an explicit
// verified odd-cycle witness for each non-bipartite component.
std::vector<ComponentReport> components_bipartiteness(const Graph& g);

} // namespace cyclefit
