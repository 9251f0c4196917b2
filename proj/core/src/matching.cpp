#include "cyclefit/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace cyclefit {

namespace {

struct Blossom {
    const Graph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom;

    explicit Blossom(const Graph& g_)
        : g(g_), n(g_.vertex_count()), match(static_cast<size_t>(n), -1),
          parent(static_cast<size_t>(n), -1), base(static_cast<size_t>(n)),
          used(static_cast<size_t>(n), 0), in_blossom(static_cast<size_t>(n), 0) {}

    int lowest_common_base(int a, int b) {
        std::vector<char> mark(static_cast<size_t>(n), 0);
        for (;;) {
            a = base[static_cast<size_t>(a)];
            mark[static_cast<size_t>(a)] = 1;
            if (match[static_cast<size_t>(a)] == -1)
                break;
            a = parent[static_cast<size_t>(match[static_cast<size_t>(a)])];
        }
        for (;;) {
            b = base[static_cast<size_t>(b)];
            if (mark[static_cast<size_t>(b)])
                return b;
            b = parent[static_cast<size_t>(match[static_cast<size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[static_cast<size_t>(v)] != b) {
            in_blossom[static_cast<size_t>(base[static_cast<size_t>(v)])] = 1;
            in_blossom[static_cast<size_t>(base[static_cast<size_t>(match[static_cast<size_t>(v)])])] = 1;
            parent[static_cast<size_t>(v)] = child;
            child = match[static_cast<size_t>(v)];
            v = parent[static_cast<size_t>(match[static_cast<size_t>(v)])];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[static_cast<size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.neighbors(v)) {
                if (base[static_cast<size_t>(v)] == base[static_cast<size_t>(to)] ||
                    match[static_cast<size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match[static_cast<size_t>(to)] != -1 &&
                     parent[static_cast<size_t>(match[static_cast<size_t>(to)])] != -1)) {
                    // Odd cycle through the search tree: contract the blossom.
                    int cur_base = lowest_common_base(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i) {
                        if (in_blossom[static_cast<size_t>(base[static_cast<size_t>(i)])]) {
                            base[static_cast<size_t>(i)] = cur_base;
                            if (!used[static_cast<size_t>(i)]) {
                                used[static_cast<size_t>(i)] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[static_cast<size_t>(to)] == -1) {
                    parent[static_cast<size_t>(to)] = v;
                    if (match[static_cast<size_t>(to)] == -1)
                        return to;
                    used[static_cast<size_t>(match[static_cast<size_t>(to)])] = 1;
                    q.push(match[static_cast<size_t>(to)]);
                }
            }
        }
        return -1;
    }

    void run() {
        for (int v = 0; v < n; ++v) {
            if (match[static_cast<size_t>(v)] != -1)
                continue;
            int u = find_augmenting_path(v);
            while (u != -1) {
                int pv = parent[static_cast<size_t>(u)];
                int ppv = match[static_cast<size_t>(pv)];
                match[static_cast<size_t>(u)] = pv;
                match[static_cast<size_t>(pv)] = u;
                u = ppv;
            }
        }
    }
};

} // namespace

std::vector<Edge> maximum_matching(const Graph& g) {
    Blossom solver(g);
    solver.run();
    std::vector<Edge> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int m = solver.match[static_cast<size_t>(v)];
        if (m > v)
            out.emplace_back(v, m);
    }
    return out;
}

bool is_matching(const Graph& g, const std::vector<Edge>& matching) {
    std::vector<char> hit(static_cast<size_t>(g.vertex_count()), 0);
    for (const auto& [u, v] : matching) {
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
            return false;
        if (!g.adjacent(u, v) || hit[static_cast<size_t>(u)] || hit[static_cast<size_t>(v)])
            return false;
        hit[static_cast<size_t>(u)] = hit[static_cast<size_t>(v)] = 1;
    }
    return true;
}

} // namespace cyclefit
