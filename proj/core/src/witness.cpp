#include "cyclefit/witness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cyclefit/prng.hpp"
#include "cyclefit/regularity.hpp"

namespace cyclefit {

double SideThresholds::hub_blue(int n) const {
    return multiplier * std::pow(n, 0.9);
}

std::string to_string(PathBuildStatus s) {
    switch (s) {
    case PathBuildStatus::Ok:
        return "ok";
    case PathBuildStatus::ParityError:
        return "parity-error";
    case PathBuildStatus::LengthCapError:
        return "length-cap-error";
    case PathBuildStatus::StrongDegreeError:
        return "strong-degree-error";
    case PathBuildStatus::DeadEnd:
        return "dead-end";
    }
    return "?";
}

Classification classify_vertices(const Graph& g, const EdgeColoring& coloring,
                                 const VertexSet& V1, const VertexSet& V2,
                                 const SideThresholds& thr) {
    if (!coloring.matches(g))
        throw InputError("coloring does not match the host graph");
    if (V1.intersects(V2))
        throw InputError("V1 and V2 must be disjoint");
    const int n = (g.vertex_count() + 1) / 2;

    Classification cls;
    cls.W1 = VertexSet(g.vertex_count());
    cls.W2 = VertexSet(g.vertex_count());
    cls.unclassified = VertexSet(g.vertex_count());

    for (int v = 0; v < g.vertex_count(); ++v) {
        int side1 = intersection_count(g.row(v), V1.words());
        int side2 = intersection_count(g.row(v), V2.words());
        if (side1 < thr.side_degree(n) || side2 < thr.side_degree(n)) {
            if (!cls.special)
                cls.special = v;
            else
                cls.unclassified.insert(v);
            continue;
        }
        int red1 = coloring.colored_degree_into(g, v, Color::Red, V1);
        int blue1 = coloring.colored_degree_into(g, v, Color::Blue, V1);
        if (red1 >= thr.many_red(n) && blue1 <= thr.hub_blue(n)) {
            cls.W1.insert(v);
            continue;
        }
        int red2 = coloring.colored_degree_into(g, v, Color::Red, V2);
        int blue2 = coloring.colored_degree_into(g, v, Color::Blue, V2);
        if (red2 >= thr.many_red(n) && blue2 <= thr.hub_blue(n)) {
            cls.W2.insert(v);
            continue;
        }
        cls.unclassified.insert(v);
    }
    return cls;
}

namespace {

int unused_count(std::span<const uint64_t> row, std::span<const uint64_t> side,
                 const std::vector<uint64_t>& used) {
    int c = 0;
    size_t m = std::min({row.size(), side.size(), used.size()});
    for (size_t i = 0; i < m; ++i)
        c += std::popcount(row[i] & side[i] & ~used[i]);
    return c;
}

struct PathSearch {
    const Graph& sub; // one-color subgraph
    const VertexSet& A;
    const VertexSet& B;
    int goal;
    uint64_t budget;
    std::vector<uint64_t> used;
    std::vector<int> path;

    PathSearch(const Graph& sub_, const VertexSet& A_, const VertexSet& B_, int goal_,
               uint64_t budget_)
        : sub(sub_), A(A_), B(B_), goal(goal_),
          used(static_cast<size_t>(sub_.words()), 0) {
        budget = budget_;
    }

    void mark(int v) { used[static_cast<size_t>(v >> 6)] |= 1ULL << (v & 63); }
    void unmark(int v) { used[static_cast<size_t>(v >> 6)] &= ~(1ULL << (v & 63)); }
    bool is_used(int v) const {
        return (used[static_cast<size_t>(v >> 6)] >> (v & 63)) & 1u;
    }

    const VertexSet& side_of(int v) const { return A.contains(v) ? A : B; }
    const VertexSet& other_side(int v) const { return A.contains(v) ? B : A; }

    bool extend(int x, int remaining) {
        if (budget-- == 0)
            return false;
        const VertexSet& next_side = other_side(x);
        if (remaining == 1)
            return next_side.contains(goal) && !is_used(goal) && sub.adjacent(x, goal);

        // Candidates ordered by most unused neighbors on their far side.
        std::vector<std::pair<int, int>> candidates;
        for (int y : sub.neighbors(x)) {
            if (!next_side.contains(y) || is_used(y) || y == goal)
                continue;
            if (remaining == 2 && !sub.adjacent(y, goal))
                continue;
            candidates.emplace_back(-unused_count(sub.row(y), side_of(x).words(), used), y);
        }
        std::sort(candidates.begin(), candidates.end());
        for (auto [key, y] : candidates) {
            (void)key;
            mark(y);
            path.push_back(y);
            if (extend(y, remaining - 1))
                return true;
            path.pop_back();
            unmark(y);
            if (budget == 0)
                return false;
        }
        return false;
    }

    std::optional<std::vector<int>> run(int start, int length) {
        std::fill(used.begin(), used.end(), 0);
        path.assign(1, start);
        mark(start);
        if (extend(start, length)) {
            path.push_back(goal);
            return path;
        }
        return std::nullopt;
    }
};

} // namespace

PathBuildResult bipartite_path_builder(const Graph& g, const EdgeColoring& coloring, Color color,
                                       const VertexSet& A, const VertexSet& B, int u, int v,
                                       int length, const PathBuildOptions& opts) {
    if (!coloring.matches(g))
        throw InputError("coloring does not match the host graph");
    if (A.intersects(B))
        throw InputError("path builder sides must be disjoint");
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v)
        throw InputError("path endpoints must be distinct");
    bool u_in_a = A.contains(u), u_in_b = B.contains(u);
    bool v_in_a = A.contains(v), v_in_b = B.contains(v);
    if ((!u_in_a && !u_in_b) || (!v_in_a && !v_in_b))
        throw InputError("path endpoints must belong to A or B");
    if (length < 1)
        throw InputError("path length must be at least 1");

    PathBuildResult result;
    const bool cross = u_in_a != v_in_a;
    if (cross != (length % 2 == 1)) {
        result.status = PathBuildStatus::ParityError;
        result.detail = cross ? "endpoints on opposite sides need odd length"
                              : "endpoints on one side need even length";
        return result;
    }

    const Graph sub = coloring.subgraph(color);
    const long long cross_edges = edge_count_between(sub, A, B);
    const long long a = A.count(), b = B.count();
    const double density = static_cast<double>(cross_edges) / (static_cast<double>(a) * b);
    if (density <= 2 * opts.eps) {
        result.status = PathBuildStatus::LengthCapError;
        result.detail = "pair density " + std::to_string(density) +
                        " too small for eps=" + std::to_string(opts.eps);
        return result;
    }
    const double cap = 2.0 * (1.0 - 2.0 * opts.eps / density) * static_cast<double>(std::min(a, b));
    if (length > cap) {
        std::ostringstream d;
        d << "length " << length << " exceeds cap " << cap;
        result.status = PathBuildStatus::LengthCapError;
        result.detail = d.str();
        return result;
    }

    if (opts.check_strong_degree) {
        std::string why;
        if (!strong_degree_condition_holds(sub, A, B, &why)) {
            result.status = PathBuildStatus::StrongDegreeError;
            result.detail = why;
            return result;
        }
    }

    const uint64_t budget =
        opts.backtrack_budget_per_length * static_cast<uint64_t>(length) + 1000;
    PathSearch forward(sub, A, B, v, budget);
    std::optional<std::vector<int>> found = forward.run(u, length);
    if (!found) {
        // One restart with the endpoint order reversed.
        PathSearch backward(sub, A, B, u, budget);
        found = backward.run(v, length);
        if (found)
            std::reverse(found->begin(), found->end());
    }
    if (!found) {
        result.status = PathBuildStatus::DeadEnd;
        result.detail = "greedy extension dead-ended in both directions";
        return result;
    }

    // Independent re-verification before emission.
    const std::vector<int>& p = *found;
    bool ok = static_cast<int>(p.size()) == length + 1 && p.front() == u && p.back() == v;
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    for (size_t i = 0; ok && i < p.size(); ++i) {
        if (seen[static_cast<size_t>(p[i])])
            ok = false;
        seen[static_cast<size_t>(p[i])] = 1;
        if (i + 1 < p.size() && (!g.adjacent(p[i], p[i + 1]) || coloring.at(p[i], p[i + 1]) != color))
            ok = false;
    }
    if (!ok)
        throw std::logic_error("internal error: built path failed re-verification");
    result.status = PathBuildStatus::Ok;
    result.path = p;
    return result;
}

bool SpectrumBuildResult::complete(int lo, int hi) const {
    for (int len = lo; len <= hi; ++len)
        if (!cycles.contains(len))
            return false;
    return true;
}

namespace {

CycleWitness verified_colored_cycle(const Graph& g, const EdgeColoring& coloring, Color color,
                                    std::vector<int> vertices) {
    CycleWitness w{std::move(vertices)};
    if (!w.verify(g))
        throw std::logic_error("internal error: cycle failed adjacency re-verification");
    for (size_t i = 0; i < w.vertices.size(); ++i) {
        int a = w.vertices[i];
        int b = w.vertices[(i + 1) % w.vertices.size()];
        if (coloring.at(a, b) != color)
            throw std::logic_error("internal error: cycle edge has the wrong color");
    }
    return w;
}

// Highest color-degree into `target`, ties to the smaller id; -1 if none.
int best_endpoint(const Graph& sub, const VertexSet& candidates, const VertexSet& target,
                  int exclude = -1) {
    int best = -1, best_deg = -1;
    for (int v : candidates.to_indices()) {
        if (v == exclude)
            continue;
        int d = intersection_count(sub.row(v), target.words());
        if (d > best_deg) {
            best_deg = d;
            best = v;
        }
    }
    return best;
}

} // namespace

SpectrumBuildResult build_blue_spectrum(const Graph& g, const EdgeColoring& coloring,
                                        const VertexSet& V1, const VertexSet& V2, int hub,
                                        const SideThresholds& thr,
                                        const PathBuildOptions& path_opts) {
    if (!coloring.matches(g))
        throw InputError("coloring does not match the host graph");
    if (V1.intersects(V2))
        throw InputError("V1 and V2 must be disjoint");
    g.check_vertex(hub);
    const int n = (g.vertex_count() + 1) / 2;

    VertexSet A = V1;
    VertexSet B = V2;
    if (A.contains(hub))
        A.erase(hub);
    if (B.contains(hub))
        B.erase(hub);

    const Graph blue = coloring.subgraph(Color::Blue);
    VertexSet hub_nbrs = blue.neighbor_set(hub);
    VertexSet nb1 = hub_nbrs.set_intersect(A);
    VertexSet nb2 = hub_nbrs.set_intersect(B);
    const double need = thr.hub_blue(n);
    if (nb1.count() < need)
        throw InputError("hub " + std::to_string(hub) + " has " + std::to_string(nb1.count()) +
                         " blue neighbors in V1, needs at least " + std::to_string(need));
    if (nb2.count() < need)
        throw InputError("hub " + std::to_string(hub) + " has " + std::to_string(nb2.count()) +
                         " blue neighbors in V2, needs at least " + std::to_string(need));

    SpectrumBuildResult result;
    for (int len = 3; len <= n; ++len) {
        if (len == 3) {
            bool done = false;
            for (int a : nb1.to_indices()) {
                int b = -1;
                for (int c : nb2.to_indices())
                    if (blue.adjacent(a, c)) {
                        b = c;
                        break;
                    }
                if (b >= 0) {
                    result.cycles[3] =
                        verified_colored_cycle(g, coloring, Color::Blue, {hub, a, b});
                    done = true;
                    break;
                }
            }
            if (!done)
                result.gaps.push_back({3, "no blue edge between the hub's neighborhoods"});
            continue;
        }
        if (len % 2 == 1) {
            int a = best_endpoint(blue, nb1, B);
            int b = best_endpoint(blue, nb2, A);
            if (a < 0 || b < 0) {
                result.gaps.push_back({len, "no usable hub neighbors"});
                continue;
            }
            PathBuildResult path =
                bipartite_path_builder(g, coloring, Color::Blue, A, B, a, b, len - 2, path_opts);
            if (path.status != PathBuildStatus::Ok) {
                result.gaps.push_back({len, to_string(path.status) + ": " + path.detail});
                continue;
            }
            std::vector<int> cycle{hub};
            cycle.insert(cycle.end(), path.path.begin(), path.path.end());
            result.cycles[len] = verified_colored_cycle(g, coloring, Color::Blue, cycle);
        } else {
            int x = best_endpoint(blue, A, B);
            int y = x >= 0 ? best_endpoint(blue, blue.neighbor_set(x).set_intersect(B), A) : -1;
            if (x < 0 || y < 0) {
                result.gaps.push_back({len, "no blue cross edge in the pair"});
                continue;
            }
            PathBuildResult path =
                bipartite_path_builder(g, coloring, Color::Blue, A, B, x, y, len - 1, path_opts);
            if (path.status != PathBuildStatus::Ok) {
                result.gaps.push_back({len, to_string(path.status) + ": " + path.detail});
                continue;
            }
            result.cycles[len] = verified_colored_cycle(g, coloring, Color::Blue, path.path);
        }
    }
    return result;
}

SpectrumBuildResult build_blue_spectrum_endgame(const Graph& g, const EdgeColoring& coloring,
                                                const VertexSet& V1, const VertexSet& V2,
                                                const EndgameSeed& seed,
                                                const PathBuildOptions& path_opts) {
    if (!coloring.matches(g))
        throw InputError("coloring does not match the host graph");
    if (V1.intersects(V2))
        throw InputError("V1 and V2 must be disjoint");
    const int n = (g.vertex_count() + 1) / 2;
    for (int v : {seed.s, seed.w, seed.v1, seed.v2, seed.v3})
        g.check_vertex(v);
    if (!V1.contains(seed.v1) || !V1.contains(seed.v3) || seed.v1 == seed.v3)
        throw InputError("endgame needs distinct v1, v3 in V1");
    if (!V2.contains(seed.v2))
        throw InputError("endgame needs v2 in V2");

    auto need_blue = [&](int a, int b, const char* name) {
        if (!g.adjacent(a, b) || coloring.at(a, b) != Color::Blue)
            throw InputError(std::string("endgame seed edge ") + name + " (" +
                             std::to_string(a) + "," + std::to_string(b) + ") is not blue");
    };
    need_blue(seed.s, seed.w, "s-w");
    need_blue(seed.w, seed.v1, "w-v1");
    need_blue(seed.v1, seed.s, "v1-s");
    need_blue(seed.v1, seed.v2, "v1-v2");
    need_blue(seed.v2, seed.v3, "v2-v3");
    need_blue(seed.v3, seed.s, "v3-s");

    VertexSet A = V1;
    VertexSet B = V2;
    for (int x : {seed.v1, seed.s, seed.w}) {
        if (A.contains(x))
            A.erase(x);
        if (B.contains(x))
            B.erase(x);
    }
    // Path endpoints stay inside the working sides.
    A.insert(seed.v3);
    B.insert(seed.v2);

    SpectrumBuildResult result;
    for (int len = 3; len <= n; ++len) {
        if (len == 3) {
            result.cycles[3] =
                verified_colored_cycle(g, coloring, Color::Blue, {seed.s, seed.w, seed.v1});
            continue;
        }
        if (len == 5) {
            result.cycles[5] = verified_colored_cycle(
                g, coloring, Color::Blue, {seed.s, seed.w, seed.v1, seed.v2, seed.v3});
            continue;
        }
        if (len % 2 == 1) {
            // close the 4-edge path v3-s-w-v1-v2 with a blue path v2 -> v3
            PathBuildResult path = bipartite_path_builder(g, coloring, Color::Blue, A, B, seed.v3,
                                                          seed.v2, len - 4, path_opts);
            if (path.status != PathBuildStatus::Ok) {
                result.gaps.push_back({len, to_string(path.status) + ": " + path.detail});
                continue;
            }
            std::vector<int> cycle{seed.s, seed.w, seed.v1};
            cycle.insert(cycle.end(), path.path.rbegin(), path.path.rend());
            result.cycles[len] = verified_colored_cycle(g, coloring, Color::Blue, cycle);
        } else {
            // close the blue edge v2-v3
            PathBuildResult path = bipartite_path_builder(g, coloring, Color::Blue, A, B, seed.v3,
                                                          seed.v2, len - 1, path_opts);
            if (path.status != PathBuildStatus::Ok) {
                result.gaps.push_back({len, to_string(path.status) + ": " + path.detail});
                continue;
            }
            result.cycles[len] = verified_colored_cycle(g, coloring, Color::Blue, path.path);
        }
    }
    return result;
}

std::optional<CycleWitness> rotation_extend(const Graph& g_red, const CycleWitness& cycle, int w,
                                            const VertexSet& V_i) {
    if (!cycle.verify(g_red))
        throw InputError("rotation_extend needs a valid cycle in the red graph");
    g_red.check_vertex(w);
    const int len = cycle.length();
    for (int p = 0; p < len; ++p)
        if (cycle.vertices[static_cast<size_t>(p)] == w)
            throw InputError("rotation_extend vertex already lies on the cycle");

    std::vector<int> nbr_positions;
    for (int p = 0; p < len; ++p)
        if (g_red.adjacent(w, cycle.vertices[static_cast<size_t>(p)]))
            nbr_positions.push_back(p);
    if (nbr_positions.size() < 2)
        return std::nullopt;

    auto vertex_at = [&](int p) { return cycle.vertices[static_cast<size_t>((p + len) % len)]; };

    for (int a : nbr_positions) {
        for (int b : nbr_positions) {
            if (a == b)
                continue;
            int pa = vertex_at(a - 1);
            int pb = vertex_at(b - 1);
            if (!V_i.contains(pa) || !V_i.contains(pb) || !g_red.adjacent(pa, pb))
                continue;
            // Forward segment b..a-1, backward segment b-1..a, then w. The
            // pa-pb edge joins the segments; w's two cycle neighbors close it.
            std::vector<int> next;
            next.reserve(static_cast<size_t>(len) + 1);
            for (int p = b;; ++p) {
                next.push_back(vertex_at(p));
                if (p % len == (a - 1 + len) % len)
                    break;
            }
            for (int p = b - 1 + len;; --p) {
                next.push_back(vertex_at(p));
                if (p % len == a % len)
                    break;
            }
            next.push_back(w);
            return make_verified_cycle(g_red, std::move(next));
        }
    }
    return std::nullopt;
}

SpectrumBuildResult build_red_pancyclic(const Graph& g, const EdgeColoring& coloring,
                                        const VertexSet& W_i, const VertexSet& V_i,
                                        const SideThresholds& thr,
                                        const PancyclicOptions& opts) {
    if (!coloring.matches(g))
        throw InputError("coloring does not match the host graph");
    const int n = (g.vertex_count() + 1) / 2;
    const Graph red = coloring.subgraph(Color::Red);

    for (int v : W_i.to_indices()) {
        int d = intersection_count(red.row(v), V_i.words());
        if (d < thr.many_red(n))
            throw InputError("vertex " + std::to_string(v) + " has only " + std::to_string(d) +
                             " red neighbors in V_i, needs at least " +
                             std::to_string(thr.many_red(n)));
    }

    SpectrumBuildResult result;
    const int m = W_i.count();
    if (m < 3)
        return result;

    // Work inside V_i ∩ W_i so every constructed cycle stays within W_i.
    VertexSet core = V_i.set_intersect(W_i);
    if (core.count() < 3) {
        for (int len = 3; len <= m; ++len)
            result.gaps.push_back({len, "V_i ∩ W_i too small to seed constructions"});
        return result;
    }

    int center = best_endpoint(red, core, core);
    VertexSet rest = core;
    rest.erase(center);
    VertexSet center_red = red.neighbor_set(center).set_intersect(rest);

    // Balanced split of the core around the center: randomized attempts, then
    // a deterministic alternating fallback.
    const double side_need = 0.1 * n * thr.multiplier;
    std::vector<int> rest_idx = rest.to_indices();
    VertexSet S1(g.vertex_count()), S2(g.vertex_count());
    bool split_ok = false;
    for (int attempt = 0; attempt < 20 && !split_ok; ++attempt) {
        SplitMix64 rng(opts.split_seed + static_cast<uint64_t>(attempt));
        std::vector<int> order = rest_idx;
        for (size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.next_below(i)]);
        VertexSet cand1(g.vertex_count()), cand2(g.vertex_count());
        for (size_t i = 0; i < order.size(); ++i)
            (i < order.size() / 2 ? cand1 : cand2).insert(order[i]);
        int r1 = intersection_count(center_red.words(), cand1.words());
        int r2 = intersection_count(center_red.words(), cand2.words());
        if (r1 >= side_need && r2 >= side_need) {
            S1 = cand1;
            S2 = cand2;
            split_ok = true;
        }
    }
    if (!split_ok) {
        // Alternate the center's red neighbors across the sides, then the rest.
        S1 = VertexSet(g.vertex_count());
        S2 = VertexSet(g.vertex_count());
        int flip = 0;
        for (int v : rest_idx)
            if (center_red.contains(v))
                ((flip++ % 2 == 0) ? S1 : S2).insert(v);
        for (int v : rest_idx)
            if (!center_red.contains(v))
                (S1.count() <= S2.count() ? S1 : S2).insert(v);
    }

    VertexSet red1 = center_red.set_intersect(S1);
    VertexSet red2 = center_red.set_intersect(S2);

    // Medium lengths go through the center; the path cap decides the handoff
    // to rotation extension.
    double cap = 0.0;
    {
        long long cross = edge_count_between(red, S1, S2);
        long long a = S1.count(), b = S2.count();
        if (a > 0 && b > 0 && cross > 0) {
            double d = static_cast<double>(cross) / (static_cast<double>(a) * b);
            if (d > 2 * opts.path.eps)
                cap = 2.0 * (1.0 - 2.0 * opts.path.eps / d) * static_cast<double>(std::min(a, b));
        }
    }

    int longest = 0;
    for (int len = 3; len <= m && len - 2 <= cap; ++len) {
        if (len == 3) {
            bool done = false;
            for (int a : red1.to_indices()) {
                for (int b : red2.to_indices())
                    if (red.adjacent(a, b)) {
                        result.cycles[3] =
                            verified_colored_cycle(g, coloring, Color::Red, {center, a, b});
                        done = true;
                        break;
                    }
                if (done)
                    break;
            }
            if (done)
                longest = 3;
            else
                result.gaps.push_back({3, "no red edge between the center's split neighborhoods"});
            continue;
        }
        int a = -1, b = -1;
        if (len % 2 == 1) {
            a = best_endpoint(red, red1, S2);
            b = best_endpoint(red, red2, S1);
        } else {
            a = best_endpoint(red, red1, S2);
            b = best_endpoint(red, red1, S2, a);
        }
        if (a < 0 || b < 0) {
            result.gaps.push_back({len, "center lacks red neighbors on the needed sides"});
            continue;
        }
        PathBuildResult path =
            bipartite_path_builder(g, coloring, Color::Red, S1, S2, a, b, len - 2, opts.path);
        if (path.status != PathBuildStatus::Ok) {
            result.gaps.push_back({len, to_string(path.status) + ": " + path.detail});
            continue;
        }
        std::vector<int> cycle{center};
        cycle.insert(cycle.end(), path.path.begin(), path.path.end());
        result.cycles[len] = verified_colored_cycle(g, coloring, Color::Red, cycle);
        longest = len;
    }

    // Long lengths: absorb leftover W_i vertices one by one.
    if (longest >= 3) {
        CycleWitness current = result.cycles[longest];
        for (int len = longest + 1; len <= m; ++len) {
            std::vector<char> on_cycle(static_cast<size_t>(g.vertex_count()), 0);
            for (int v : current.vertices)
                on_cycle[static_cast<size_t>(v)] = 1;
            bool extended = false;
            for (int w : W_i.to_indices()) {
                if (on_cycle[static_cast<size_t>(w)])
                    continue;
                if (auto next = rotation_extend(red, current, w, V_i)) {
                    current = *next;
                    result.cycles[len] =
                        verified_colored_cycle(g, coloring, Color::Red, current.vertices);
                    extended = true;
                    break;
                }
            }
            if (!extended) {
                result.gaps.push_back({len, "rotation extension found no qualifying vertex"});
                break;
            }
        }
        if (opts.external_vertex && result.cycles.contains(m)) {
            int ext = *opts.external_vertex;
            if (W_i.contains(ext))
                throw InputError("external vertex must lie outside W_i");
            if (auto next = rotation_extend(red, result.cycles[m], ext, V_i))
                result.cycles[m + 1] =
                    verified_colored_cycle(g, coloring, Color::Red, next->vertices);
            else
                result.gaps.push_back({m + 1, "external vertex admits no rotation extension"});
        }
    } else {
        for (int len = std::max(4, longest + 1); len <= m; ++len)
            result.gaps.push_back({len, "no medium cycle to start rotation extension from"});
    }

    return result;
}

} // namespace cyclefit
