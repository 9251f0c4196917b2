#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cyclefit/coloring.hpp"
#include "cyclefit/graph.hpp"

namespace cyclefit {

struct SearchBudget {
    uint64_t node_cap = 200'000'000;
    double time_cap_seconds = 600.0;
    int threads = 1;
    bool deterministic = true; // forces a single worker and a reproducible witness
};

enum class ArrowStatus { Arrows, NotArrows, Unknown };

std::string to_string(ArrowStatus s);

struct ArrowVerdict {
    ArrowStatus status = ArrowStatus::Unknown;
    std::optional<EdgeColoring> counterexample; // passes verify_avoidance for {red C_n, blue C_k}
    uint64_t nodes_explored = 0;
    double wall_seconds = 0.0;
};

// Decides g -> (C_n, C_k): every red/blue edge coloring contains a red C_n or
// a blue C_k. Backtracking over edges ordered by descending endpoint degree
// sum (ties by id); a branch closes as soon as the partial coloring forces a
// monochromatic cycle through the newly colored edge. Red is tried before
// Blue, so the deterministic single-thread counterexample is the
// lexicographically least avoiding coloring in that order. Runs subtree-split
// workers when budget.threads > 1; the status never depends on the worker
// count.
ArrowVerdict arrows(const Graph& g, int n, int k, const SearchBudget& budget = {});

// DIMACS CNF with one variable per edge (true = Red) in normalized edge
// order: each C_n copy yields a clause forbidding all-red, each C_k copy a
// clause forbidding all-blue. Satisfiable iff g does not arrow (C_n, C_k).
// Refuses (with the count) when the number of cycle copies exceeds the guard.
std::string export_cnf(const Graph& g, int n, int k, long long copy_guard = 10'000'000);

// ceil((n+1)(2n-1)/2); the formula's regime is asymptotic, reports annotate
// it as not asserted for small n.
long long rstar_formula(int n);

// 2n-1 for odd k with 3 <= k <= n, except the classical (3,3) value 6.
int ramsey_cycle_number(int n, int k);

} // namespace cyclefit
