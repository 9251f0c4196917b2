// Shared independent oracles for the test suites. Everything here is written
// naively on purpose: these implementations cross-check the real ones and
// must not share code with them.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cyclefit/coloring.hpp"
#include "cyclefit/graph.hpp"
#include "cyclefit/named_graphs.hpp"
#include "cyclefit/prng.hpp"

namespace testutil {

using cyclefit::Color;
using cyclefit::Edge;
using cyclefit::EdgeColoring;
using cyclefit::Graph;
using cyclefit::SplitMix64;
using cyclefit::VertexSet;

// Lengths of all simple cycles, by exhaustive DFS over paths whose anchor is
// the cycle's minimum vertex (each cycle found twice, once per direction).
inline std::set<int> all_simple_cycle_lengths(const Graph& g) {
    std::set<int> lengths;
    const int n = g.vertex_count();
    std::vector<int> path;
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::function<void(int)> extend = [&](int anchor) {
        int u = path.back();
        for (int v = anchor + 1; v < n; ++v) {
            if (!g.adjacent(u, v) || used[static_cast<size_t>(v)])
                continue;
            if (path.size() >= 2 && g.adjacent(v, anchor))
                lengths.insert(static_cast<int>(path.size()) + 1);
            path.push_back(v);
            used[static_cast<size_t>(v)] = 1;
            extend(anchor);
            used[static_cast<size_t>(v)] = 0;
            path.pop_back();
        }
    };
    for (int anchor = 0; anchor < n; ++anchor) {
        path.assign(1, anchor);
        std::fill(used.begin(), used.end(), 0);
        used[static_cast<size_t>(anchor)] = 1;
        extend(anchor);
    }
    return lengths;
}

inline bool has_cycle_of_length(const Graph& g, int len) {
    return all_simple_cycle_lengths(g).count(len) > 0;
}

inline long long naive_edge_count_between(const Graph& g, const VertexSet& S, const VertexSet& T) {
    long long total = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w = 0; w < g.vertex_count(); ++w)
            if (v != w && S.contains(v) && T.contains(w) && g.adjacent(v, w))
                ++total;
    return total;
}

// Maximum matching size by bitmask recursion (vertices <= ~22).
inline int naive_max_matching_size(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> memo(static_cast<size_t>(1) << n, -1);
    std::function<int(uint32_t)> best = [&](uint32_t used) -> int {
        int v = -1;
        for (int i = 0; i < n; ++i)
            if (!((used >> i) & 1)) {
                v = i;
                break;
            }
        if (v < 0)
            return 0;
        int& slot = memo[used];
        if (slot >= 0)
            return slot;
        uint32_t used_v = used | (1u << v);
        int result = best(used_v); // leave v unmatched
        for (int w = v + 1; w < n; ++w)
            if (g.adjacent(v, w) && !((used >> w) & 1))
                result = std::max(result, 1 + best(used_v | (1u << w)));
        return slot = result;
    };
    return best(0);
}

// Recursive subset enumeration for pair regularity; no bit tricks.
struct NaiveRegularity {
    bool regular = true;
    double max_deviation = 0.0;
};

inline NaiveRegularity naive_check_regular_pair(const Graph& g, const std::vector<int>& v1,
                                                const std::vector<int>& v2, double eps) {
    NaiveRegularity out;
    double e0 = 0.0;
    for (int a : v1)
        for (int b : v2)
            if (g.adjacent(a, b))
                e0 += 1.0;
    const double d0 = e0 / (static_cast<double>(v1.size()) * static_cast<double>(v2.size()));
    std::vector<int> w1, w2;
    std::function<void(size_t)> pick2 = [&](size_t i) {
        if (i == v2.size()) {
            if (static_cast<double>(w2.size()) + 1e-9 < eps * static_cast<double>(v2.size()) ||
                w2.empty())
                return;
            double e = 0.0;
            for (int a : w1)
                for (int b : w2)
                    if (g.adjacent(a, b))
                        e += 1.0;
            double d = e / (static_cast<double>(w1.size()) * static_cast<double>(w2.size()));
            double dev = std::abs(d - d0);
            out.max_deviation = std::max(out.max_deviation, dev);
            if (dev > eps + 1e-12)
                out.regular = false;
            return;
        }
        pick2(i + 1);
        w2.push_back(v2[i]);
        pick2(i + 1);
        w2.pop_back();
    };
    std::function<void(size_t)> pick1 = [&](size_t i) {
        if (i == v1.size()) {
            if (static_cast<double>(w1.size()) + 1e-9 < eps * static_cast<double>(v1.size()) ||
                w1.empty())
                return;
            pick2(0);
            return;
        }
        pick1(i + 1);
        w1.push_back(v1[i]);
        pick1(i + 1);
        w1.pop_back();
    };
    pick1(0);
    return out;
}

// Brute-force arrowing oracle: every coloring of the edge set, checked
// against precomputed cycle edge masks.
inline std::vector<uint64_t> cycle_edge_masks(const Graph& g, int len) {
    const std::vector<Edge> edges = g.edges();
    auto edge_bit = [&](int u, int v) {
        if (u > v)
            std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
        return static_cast<size_t>(it - edges.begin());
    };
    std::vector<uint64_t> masks;
    const int n = g.vertex_count();
    std::vector<int> path;
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::function<void(int)> extend = [&](int anchor) {
        int u = path.back();
        for (int v = anchor + 1; v < n; ++v) {
            if (!g.adjacent(u, v) || used[static_cast<size_t>(v)])
                continue;
            path.push_back(v);
            used[static_cast<size_t>(v)] = 1;
            if (static_cast<int>(path.size()) == len) {
                if (path[1] < path.back() && g.adjacent(path.back(), anchor)) {
                    uint64_t m = 0;
                    for (size_t i = 0; i < path.size(); ++i)
                        m |= 1ULL << edge_bit(path[i], path[(i + 1) % path.size()]);
                    masks.push_back(m);
                }
            } else {
                extend(anchor);
            }
            used[static_cast<size_t>(v)] = 0;
            path.pop_back();
        }
    };
    for (int anchor = 0; anchor < n; ++anchor) {
        path.assign(1, anchor);
        std::fill(used.begin(), used.end(), 0);
        used[static_cast<size_t>(anchor)] = 1;
        extend(anchor);
    }
    return masks;
}

// True iff every coloring yields a red C_n or a blue C_k (red = set bit).
inline bool brute_force_arrows(const Graph& g, int n, int k) {
    const int m = static_cast<int>(g.edge_count());
    if (m > 24)
        throw std::runtime_error("brute_force_arrows: too many edges");
    std::vector<uint64_t> red_masks = cycle_edge_masks(g, n);
    std::vector<uint64_t> blue_masks = cycle_edge_masks(g, k);
    for (uint64_t red = 0; red < (1ULL << m); ++red) {
        bool hit = false;
        for (uint64_t mask : red_masks)
            if ((mask & red) == mask) {
                hit = true;
                break;
            }
        if (!hit)
            for (uint64_t mask : blue_masks)
                if ((mask & red) == 0) {
                    hit = true;
                    break;
                }
        if (!hit)
            return false; // this coloring avoids both
    }
    return true;
}

// Minimal DIMACS parse + brute-force satisfiability for small variable counts.
struct Cnf {
    int vars = 0;
    std::vector<std::vector<long long>> clauses;
};

inline Cnf parse_dimacs(const std::string& text) {
    Cnf cnf;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        if (line[0] == 'p') {
            std::istringstream ls(line);
            std::string p, fmt;
            long long clause_count;
            ls >> p >> fmt >> cnf.vars >> clause_count;
            continue;
        }
        std::istringstream ls(line);
        std::vector<long long> clause;
        long long lit;
        while (ls >> lit && lit != 0)
            clause.push_back(lit);
        if (!clause.empty())
            cnf.clauses.push_back(std::move(clause));
    }
    return cnf;
}

inline bool brute_force_satisfiable(const Cnf& cnf) {
    if (cnf.vars > 24)
        throw std::runtime_error("brute_force_satisfiable: too many variables");
    for (uint64_t assign = 0; assign < (1ULL << cnf.vars); ++assign) {
        bool ok = true;
        for (const auto& clause : cnf.clauses) {
            bool sat = false;
            for (long long lit : clause) {
                int var = static_cast<int>(lit > 0 ? lit : -lit) - 1;
                bool value = (assign >> var) & 1;
                if ((lit > 0) == value) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    }
    return false;
}

inline EdgeColoring random_coloring(const Graph& g, SplitMix64& rng) {
    std::vector<Color> colors;
    colors.reserve(static_cast<size_t>(g.edge_count()));
    for (long long i = 0; i < g.edge_count(); ++i)
        colors.push_back(rng.coin() ? Color::Red : Color::Blue);
    return EdgeColoring(g, std::move(colors));
}

} // namespace testutil
