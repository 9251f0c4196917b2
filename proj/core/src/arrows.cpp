#include "cyclefit/arrows.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include "cyclefit/cycles.hpp"
#include "cyclefit/prng.hpp"

namespace cyclefit {

std::string to_string(ArrowStatus s) {
    switch (s) {
    case ArrowStatus::Arrows:
        return "arrows";
    case ArrowStatus::NotArrows:
        return "not-arrows";
    case ArrowStatus::Unknown:
        return "unknown";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// Mutable one-color adjacency used during the search.
struct ColorState {
    int n = 0;
    int words = 0;
    std::vector<uint64_t> bits;

    explicit ColorState(int n_) : n(n_), words(detail::words_for(n_)),
                                  bits(static_cast<size_t>(n_) * detail::words_for(n_), 0) {}
    bool adjacent(int u, int v) const {
        return (bits[static_cast<size_t>(u) * words + (v >> 6)] >> (v & 63)) & 1u;
    }
    void add(int u, int v) {
        bits[static_cast<size_t>(u) * words + (v >> 6)] |= 1ULL << (v & 63);
        bits[static_cast<size_t>(v) * words + (u >> 6)] |= 1ULL << (u & 63);
    }
    void remove(int u, int v) {
        bits[static_cast<size_t>(u) * words + (v >> 6)] &= ~(1ULL << (v & 63));
        bits[static_cast<size_t>(v) * words + (u >> 6)] &= ~(1ULL << (u & 63));
    }
    const uint64_t* row(int v) const { return bits.data() + static_cast<size_t>(v) * words; }
};

// Does the color graph contain a path of exactly `steps` edges from u to v?
// Equivalently: does adding edge uv force a monochromatic C_{steps+1} through
// it. Exact DFS pruned by BFS layers toward v.
struct PathDetector {
    const ColorState& state;
    std::vector<int> dist;
    std::vector<char> used;

    explicit PathDetector(const ColorState& s)
        : state(s), dist(static_cast<size_t>(s.n)), used(static_cast<size_t>(s.n), 0) {}

    bool path_exists(int u, int v, int steps) {
        const int n = state.n;
        std::fill(dist.begin(), dist.end(), n);
        dist[static_cast<size_t>(v)] = 0;
        std::deque<int> queue{v};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (dist[static_cast<size_t>(x)] >= steps)
                continue;
            const uint64_t* row = state.row(x);
            for (int wi = 0; wi < state.words; ++wi) {
                uint64_t w = row[wi];
                while (w) {
                    int y = wi * 64 + std::countr_zero(w);
                    w &= w - 1;
                    if (dist[static_cast<size_t>(y)] > dist[static_cast<size_t>(x)] + 1) {
                        dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        if (dist[static_cast<size_t>(u)] > steps)
            return false;
        std::fill(used.begin(), used.end(), 0);
        used[static_cast<size_t>(u)] = 1;
        return dfs(u, v, steps);
    }

private:
    bool dfs(int x, int goal, int remaining) {
        if (remaining == 0)
            return x == goal;
        const uint64_t* row = state.row(x);
        for (int wi = 0; wi < state.words; ++wi) {
            uint64_t w = row[wi];
            while (w) {
                int y = wi * 64 + std::countr_zero(w);
                w &= w - 1;
                if (used[static_cast<size_t>(y)] || dist[static_cast<size_t>(y)] > remaining - 1)
                    continue;
                if (y == goal && remaining > 1)
                    continue; // the goal may only appear as the final vertex
                used[static_cast<size_t>(y)] = 1;
                if (dfs(y, goal, remaining - 1))
                    return true;
                used[static_cast<size_t>(y)] = 0;
            }
        }
        return false;
    }
};

enum class SubtreeOutcome { Closed, Counterexample, Aborted };

struct Shared {
    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> found{false};
    uint64_t node_cap;
    Clock::time_point deadline;
};

struct SequentialSolver {
    const Graph& g;
    const std::vector<Edge>& order;
    int red_len, blue_len;
    Shared& shared;
    ColorState red, blue;
    PathDetector red_paths, blue_paths;
    std::vector<Color> assignment;
    std::vector<Color> preferred; // per edge index, tried first
    uint64_t local_nodes = 0;

    SequentialSolver(const Graph& g_, const std::vector<Edge>& order_, int n, int k,
                     Shared& shared_)
        : g(g_), order(order_), red_len(n), blue_len(k), shared(shared_),
          red(g_.vertex_count()), blue(g_.vertex_count()), red_paths(red), blue_paths(blue),
          assignment(order_.size(), Color::Red), preferred(order_.size(), Color::Red) {}

    bool over_budget() {
        if (++local_nodes % 1024 == 0) {
            shared.nodes.fetch_add(1024, std::memory_order_relaxed);
            if (shared.nodes.load(std::memory_order_relaxed) > shared.node_cap ||
                Clock::now() > shared.deadline)
                return true;
        }
        return false;
    }

    bool try_color(size_t index, Color c, SubtreeOutcome& outcome) {
        auto [u, v] = order[index];
        ColorState& state = c == Color::Red ? red : blue;
        PathDetector& detector = c == Color::Red ? red_paths : blue_paths;
        int len = c == Color::Red ? red_len : blue_len;
        assignment[index] = c;
        state.add(u, v);
        if (!detector.path_exists(u, v, len - 1)) {
            SubtreeOutcome r = solve(index + 1);
            if (r != SubtreeOutcome::Closed) {
                state.remove(u, v);
                outcome = r;
                return true;
            }
        }
        state.remove(u, v);
        return false;
    }

    SubtreeOutcome solve(size_t index) {
        if (shared.stop.load(std::memory_order_relaxed))
            return SubtreeOutcome::Aborted;
        if (over_budget())
            return SubtreeOutcome::Aborted;
        if (index == order.size())
            return SubtreeOutcome::Counterexample;
        SubtreeOutcome outcome = SubtreeOutcome::Closed;
        Color first = preferred[index];
        if (try_color(index, first, outcome))
            return outcome;
        if (try_color(index, other_color(first), outcome))
            return outcome;
        return SubtreeOutcome::Closed;
    }
};

std::vector<Edge> solver_edge_order(const Graph& g) {
    std::vector<Edge> order = g.edges();
    std::stable_sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
        int da = g.degree(a.first) + g.degree(a.second);
        int db = g.degree(b.first) + g.degree(b.second);
        if (da != db)
            return da > db;
        return a < b;
    });
    return order;
}

// Portfolio hint: a balanced bipartition, preferring Blue across it and Red
// inside. Avoiding colorings of dense instances live near such splits (the
// blue side stays bipartite, red components stay small), so a worker seeded
// this way completes immediately when its split fits; the search stays
// complete either way, only the color try-order changes.
std::vector<Color> bipartition_preference(const Graph& g, const std::vector<Edge>& order,
                                          uint64_t seed) {
    const int n = g.vertex_count();
    std::vector<int> verts(static_cast<size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    SplitMix64 rng(seed);
    for (size_t i = verts.size(); i > 1; --i)
        std::swap(verts[i - 1], verts[rng.next_below(i)]);
    std::vector<char> side(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < verts.size(); ++i)
        side[static_cast<size_t>(verts[i])] = i % 2 == 0;
    std::vector<Color> pref(order.size());
    for (size_t i = 0; i < order.size(); ++i)
        pref[i] = side[static_cast<size_t>(order[i].first)] !=
                          side[static_cast<size_t>(order[i].second)]
                      ? Color::Blue
                      : Color::Red;
    return pref;
}

} // namespace

ArrowVerdict arrows(const Graph& g, int n, int k, const SearchBudget& budget) {
    if (n < 3 || k < 3)
        throw InputError("arrows needs cycle lengths of at least 3");
    if (budget.node_cap == 0 || budget.threads < 1)
        throw InputError("search budget must have positive caps and thread count");

    const auto start = Clock::now();
    Shared shared;
    shared.node_cap = budget.node_cap;
    shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(budget.time_cap_seconds));

    const std::vector<Edge> order = solver_edge_order(g);
    const std::vector<Edge> canonical = g.edges();
    ArrowVerdict verdict;

    auto finish = [&](ArrowStatus status, const std::vector<Color>* assignment) {
        verdict.status = status;
        verdict.nodes_explored = shared.nodes.load();
        verdict.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (assignment) {
            // Map from solver order back to canonical edge order.
            std::vector<Color> by_canonical(canonical.size(), Color::Red);
            for (size_t i = 0; i < order.size(); ++i) {
                auto it = std::lower_bound(canonical.begin(), canonical.end(), order[i]);
                by_canonical[static_cast<size_t>(it - canonical.begin())] = (*assignment)[i];
            }
            EdgeColoring coloring(g, std::move(by_canonical));
            // The counterexample must itself survive exact verification.
            if (monochromatic_cycle(g, coloring, Color::Red, n, SearchLimits::unlimited())
                    .status != SearchStatus::None ||
                monochromatic_cycle(g, coloring, Color::Blue, k, SearchLimits::unlimited())
                    .status != SearchStatus::None)
                throw std::logic_error("internal error: counterexample failed verification");
            verdict.counterexample = std::move(coloring);
        }
        return verdict;
    };

    const int worker_count = budget.deterministic ? 1 : budget.threads;
    if (worker_count == 1) {
        SequentialSolver solver(g, order, n, k, shared);
        SubtreeOutcome r = solver.solve(0);
        shared.nodes.fetch_add(solver.local_nodes % 1024);
        switch (r) {
        case SubtreeOutcome::Closed:
            return finish(ArrowStatus::Arrows, nullptr);
        case SubtreeOutcome::Counterexample:
            return finish(ArrowStatus::NotArrows, &solver.assignment);
        case SubtreeOutcome::Aborted:
            return finish(ArrowStatus::Unknown, nullptr);
        }
    }

    // Racing portfolio: every worker runs the complete search over the same
    // edge order, differing only in which color it tries first (worker 0 is
    // the plain Red-first order, the rest follow seeded bipartition hints).
    // Any definite verdict is exact and cancels the rest, so the status never
    // depends on the worker count.
    std::atomic<bool> any_definite{false};
    std::atomic<bool> any_aborted{false};
    ArrowStatus portfolio_status = ArrowStatus::Unknown;
    std::vector<Color> counterexample;
    std::mutex verdict_mutex;

    auto worker = [&](int index) {
        SequentialSolver solver(g, order, n, k, shared);
        if (index > 0)
            solver.preferred = bipartition_preference(g, order, static_cast<uint64_t>(index));
        SubtreeOutcome r = solver.solve(0);
        shared.nodes.fetch_add(solver.local_nodes % 1024);
        if (r == SubtreeOutcome::Aborted) {
            any_aborted.store(true);
            return;
        }
        std::lock_guard<std::mutex> lock(verdict_mutex);
        if (!any_definite.exchange(true)) {
            portfolio_status =
                r == SubtreeOutcome::Counterexample ? ArrowStatus::NotArrows : ArrowStatus::Arrows;
            if (r == SubtreeOutcome::Counterexample)
                counterexample = solver.assignment;
            shared.stop.store(true);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(worker_count));
    for (int t = 0; t < worker_count; ++t)
        pool.emplace_back(worker, t);
    for (auto& th : pool)
        th.join();

    if (any_definite.load()) {
        if (portfolio_status == ArrowStatus::NotArrows)
            return finish(ArrowStatus::NotArrows, &counterexample);
        return finish(ArrowStatus::Arrows, nullptr);
    }
    return finish(ArrowStatus::Unknown, nullptr);
}

namespace {

// All cycles of exactly `length` as canonical vertex sequences (minimum
// vertex first, second vertex smaller than the last).
void enumerate_cycles(const Graph& g, int length, long long guard, long long& total,
                      std::vector<std::vector<int>>* out) {
    const int n = g.vertex_count();
    std::vector<int> path;
    std::vector<char> used(static_cast<size_t>(n), 0);

    auto close_check = [&](int anchor) {
        if (path[1] >= path.back())
            return; // canonical direction only
        if (!g.adjacent(path.back(), anchor))
            return;
        ++total;
        if (total > guard)
            throw InputError("cycle copy count exceeds the guard (more than " +
                             std::to_string(guard) + ")");
        if (out)
            out->push_back(path);
    };

    std::function<void(int)> extend = [&](int anchor) {
        int u = path.back();
        for (int v : g.neighbors(u)) {
            if (v <= anchor || used[static_cast<size_t>(v)])
                continue;
            path.push_back(v);
            used[static_cast<size_t>(v)] = 1;
            if (static_cast<int>(path.size()) == length)
                close_check(anchor);
            else
                extend(anchor);
            used[static_cast<size_t>(v)] = 0;
            path.pop_back();
        }
    };

    for (int anchor = 0; anchor + length <= n; ++anchor) {
        path.assign(1, anchor);
        std::fill(used.begin(), used.end(), 0);
        used[static_cast<size_t>(anchor)] = 1;
        extend(anchor);
    }
}

} // namespace

std::string export_cnf(const Graph& g, int n, int k, long long copy_guard) {
    if (n < 3 || k < 3)
        throw InputError("cnf export needs cycle lengths of at least 3");

    long long total = 0;
    std::vector<std::vector<int>> red_copies, blue_copies;
    enumerate_cycles(g, n, copy_guard, total, &red_copies);
    enumerate_cycles(g, k, copy_guard, total, &blue_copies);

    const std::vector<Edge> edges = g.edges();
    auto var_of = [&](int u, int v) {
        if (u > v)
            std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
        return static_cast<long long>(it - edges.begin()) + 1; // 1-indexed
    };

    std::string out;
    out += "p cnf " + std::to_string(edges.size()) + ' ' +
           std::to_string(red_copies.size() + blue_copies.size()) + '\n';
    auto emit = [&](const std::vector<std::vector<int>>& copies, bool negate) {
        for (const auto& cycle : copies) {
            for (size_t i = 0; i < cycle.size(); ++i) {
                long long var = var_of(cycle[i], cycle[(i + 1) % cycle.size()]);
                out += std::to_string(negate ? -var : var);
                out += ' ';
            }
            out += "0\n";
        }
    };
    emit(red_copies, true);   // no all-red C_n
    emit(blue_copies, false); // no all-blue C_k
    return out;
}

long long rstar_formula(int n) {
    if (n < 3)
        throw InputError("rstar formula needs n >= 3");
    long long prod = static_cast<long long>(n + 1) * (2LL * n - 1);
    return (prod + 1) / 2;
}

int ramsey_cycle_number(int n, int k) {
    if (k % 2 == 0)
        throw InputError("even k is outside the supported regime");
    if (k < 3 || k > n)
        throw InputError("need odd k with 3 <= k <= n");
    if (n == 3 && k == 3)
        throw InputError("(3,3) is the classical exception: the value is 6, not 2n-1 = 5");
    return 2 * n - 1;
}

} // namespace cyclefit
