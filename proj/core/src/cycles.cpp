#include "cyclefit/cycles.hpp"

#include <algorithm>
#include <deque>

namespace cyclefit {

namespace {

// BFS distances from `anchor` within the vertex set {v >= anchor}.
// Unreachable vertices get distance n (acts as infinity).
void bfs_from_anchor(const Graph& g, int anchor, std::vector<int>& dist) {
    const int n = g.vertex_count();
    std::fill(dist.begin(), dist.end(), n);
    dist[static_cast<size_t>(anchor)] = 0;
    std::deque<int> queue{anchor};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (v < anchor)
                continue;
            if (dist[static_cast<size_t>(v)] > dist[static_cast<size_t>(u)] + 1) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
}

struct CycleSearch {
    const Graph& g;
    int length;
    uint64_t cap;
    uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<int> dist;
    std::vector<char> on_path;
    std::vector<int> path;

    CycleSearch(const Graph& g_, int length_, uint64_t cap_)
        : g(g_), length(length_), cap(cap_),
          dist(static_cast<size_t>(g_.vertex_count())),
          on_path(static_cast<size_t>(g_.vertex_count()), 0) {}

    // path holds k vertices (k-1 edges); extends from its last vertex.
    bool extend() {
        if (++nodes > cap) {
            out_of_budget = true;
            return false;
        }
        const int anchor = path.front();
        const int k = static_cast<int>(path.size());
        const int u = path.back();
        for (int v : g.neighbors(u)) {
            if (v <= anchor || on_path[static_cast<size_t>(v)])
                continue;
            if (k + 1 == length) {
                if (g.adjacent(v, anchor)) {
                    path.push_back(v);
                    return true;
                }
                continue;
            }
            if (dist[static_cast<size_t>(v)] > length - k)
                continue;
            path.push_back(v);
            on_path[static_cast<size_t>(v)] = 1;
            if (extend())
                return true;
            on_path[static_cast<size_t>(v)] = 0;
            path.pop_back();
            if (out_of_budget)
                return false;
        }
        return false;
    }
};

} // namespace

CycleSearchResult find_cycle_of_length(const Graph& g, int length, SearchLimits limits) {
    if (length < 3)
        throw InputError("cycle length must be at least 3");
    CycleSearchResult result;
    if (length > g.vertex_count()) {
        result.status = SearchStatus::None;
        return result;
    }
    CycleSearch search(g, length, limits.node_cap);
    // A cycle's minimum vertex is its anchor, so anchors beyond n-length are moot.
    for (int anchor = 0; anchor + length <= g.vertex_count(); ++anchor) {
        if (g.degree(anchor) < 2)
            continue;
        bfs_from_anchor(g, anchor, search.dist);
        int reachable = 0;
        for (int v = anchor; v < g.vertex_count(); ++v)
            if (search.dist[static_cast<size_t>(v)] < g.vertex_count())
                ++reachable;
        if (reachable < length)
            continue;
        search.path.assign(1, anchor);
        std::fill(search.on_path.begin(), search.on_path.end(), 0);
        search.on_path[static_cast<size_t>(anchor)] = 1;
        if (search.extend()) {
            result.status = SearchStatus::Found;
            result.witness = make_verified_cycle(g, search.path);
            result.nodes_expanded = search.nodes;
            return result;
        }
        if (search.out_of_budget) {
            result.status = SearchStatus::Unknown;
            result.nodes_expanded = search.nodes;
            return result;
        }
    }
    result.status = SearchStatus::None;
    result.nodes_expanded = search.nodes;
    return result;
}

std::map<int, SpectrumEntry> cycle_spectrum(const Graph& g, int length_max, SearchLimits limits) {
    if (length_max < 3)
        throw InputError("spectrum upper bound must be at least 3");
    std::map<int, SpectrumEntry> out;
    for (int len = 3; len <= length_max; ++len) {
        CycleSearchResult r = find_cycle_of_length(g, len, limits);
        out[len] = SpectrumEntry{r.status, std::move(r.witness)};
    }
    return out;
}

std::vector<ComponentReport> components_bipartiteness(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<size_t>(n), -1);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<int> depth(static_cast<size_t>(n), 0);
    std::vector<ComponentReport> out;

    for (int root = 0; root < n; ++root) {
        if (side[static_cast<size_t>(root)] != -1)
            continue;
        ComponentReport report;
        report.members = VertexSet(n);
        side[static_cast<size_t>(root)] = 0;
        std::deque<int> queue{root};
        std::optional<Edge> conflict;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            report.members.insert(u);
            for (int v : g.neighbors(u)) {
                if (side[static_cast<size_t>(v)] == -1) {
                    side[static_cast<size_t>(v)] = side[static_cast<size_t>(u)] ^ 1;
                    parent[static_cast<size_t>(v)] = u;
                    depth[static_cast<size_t>(v)] = depth[static_cast<size_t>(u)] + 1;
                    queue.push_back(v);
                } else if (side[static_cast<size_t>(v)] == side[static_cast<size_t>(u)] &&
                           !conflict) {
                    conflict = Edge{u, v};
                }
            }
        }
        if (conflict) {
            report.bipartite = false;
            // Join the two BFS-tree paths at their deepest common ancestor;
            // equal side parity makes the resulting cycle odd.
            int a = conflict->first, b = conflict->second;
            std::vector<int> left{a}, right{b};
            while (depth[static_cast<size_t>(left.back())] >
                   depth[static_cast<size_t>(right.back())])
                left.push_back(parent[static_cast<size_t>(left.back())]);
            while (depth[static_cast<size_t>(right.back())] >
                   depth[static_cast<size_t>(left.back())])
                right.push_back(parent[static_cast<size_t>(right.back())]);
            while (left.back() != right.back()) {
                left.push_back(parent[static_cast<size_t>(left.back())]);
                right.push_back(parent[static_cast<size_t>(right.back())]);
            }
            std::vector<int> cycle(left.begin(), left.end());
            for (auto it = right.rbegin() + 1; it != right.rend(); ++it)
                cycle.push_back(*it);
            report.odd_cycle = make_verified_cycle(g, std::move(cycle));
        }
        out.push_back(std::move(report));
    }
    return out;
}

} // namespace cyclefit
