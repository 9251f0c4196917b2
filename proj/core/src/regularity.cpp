#include "cyclefit/regularity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cyclefit/matching.hpp"
#include "cyclefit/prng.hpp"

namespace cyclefit {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0)
        throw InputError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational pair_density(const Graph& g, const VertexSet& V1, const VertexSet& V2) {
    if (V1.count() == 0 || V2.count() == 0)
        throw InputError("pair density needs nonempty sides");
    if (V1.intersects(V2))
        throw InputError("pair density needs disjoint sides");
    long long e = edge_count_between(g, V1, V2);
    return Rational(e, static_cast<long long>(V1.count()) * V2.count());
}

namespace {

using int128 = __int128;

struct EpsRational {
    long long p; // eps = p / q, q fixed at 1e6
    static constexpr long long q = 1000000;
    explicit EpsRational(double eps) : p(std::llround(eps * 1e6)) {
        if (eps <= 0.0 || p <= 0)
            throw InputError("epsilon must be positive");
    }
    // |W| >= eps * |V| ?
    bool size_ok(long long W, long long V) const { return W * q >= p * V; }
    // |e_w/(ab) - e0/(AB)| > eps ?
    bool deviates(long long ew, long long ab, long long e0, long long AB) const {
        int128 lhs = static_cast<int128>(ew) * AB - static_cast<int128>(e0) * ab;
        if (lhs < 0)
            lhs = -lhs;
        return lhs * q > static_cast<int128>(p) * ab * AB;
    }
};

struct Deviation {
    long long abs_diff = 0; // |e_w * AB - e0 * ab|
    long long scale = 1;    // ab * AB

    bool operator>(const Deviation& other) const {
        return static_cast<int128>(abs_diff) * other.scale >
               static_cast<int128>(other.abs_diff) * scale;
    }
    double to_double() const { return static_cast<double>(abs_diff) / static_cast<double>(scale); }
};

struct BestViolation {
    bool any = false;
    Deviation dev;
    int sum = 0, min_side = 0, w1_size = 0;
    VertexSet W1, W2;

    void offer(const Deviation& d, const VertexSet& w1, const VertexSet& w2) {
        int a = w1.count(), b = w2.count();
        int s = a + b, m = std::min(a, b);
        bool better;
        if (!any)
            better = true;
        else if (d > dev)
            better = true;
        else if (dev > d)
            better = false;
        else if (s != sum)
            better = s < sum;
        else if (m != min_side)
            better = m < min_side;
        else
            better = a < w1_size;
        if (better) {
            any = true;
            dev = d;
            sum = s;
            min_side = m;
            w1_size = a;
            W1 = w1;
            W2 = w2;
        }
    }
};

VertexSet mask_to_set(int universe, const std::vector<int>& idx, uint32_t mask) {
    VertexSet s(universe);
    while (mask) {
        int b = std::countr_zero(mask);
        s.insert(idx[static_cast<size_t>(b)]);
        mask &= mask - 1;
    }
    return s;
}

} // namespace

RegularityVerdict check_regular_pair(const Graph& g, const VertexSet& V1, const VertexSet& V2,
                                     double eps, const RegularityMode& mode) {
    if (V1.count() == 0 || V2.count() == 0)
        throw InputError("regularity check needs nonempty sides");
    if (V1.intersects(V2))
        throw InputError("regularity check needs disjoint sides");
    const EpsRational er(eps);

    const std::vector<int> idx1 = V1.to_indices();
    const std::vector<int> idx2 = V2.to_indices();
    const long long A = static_cast<long long>(idx1.size());
    const long long B = static_cast<long long>(idx2.size());
    const long long e0 = edge_count_between(g, V1, V2);
    const long long AB = A * B;

    RegularityVerdict verdict;
    Deviation max_dev{0, 1};

    if (mode.exhaustive) {
        if (A > 15 || B > 15)
            throw InputError("exhaustive regularity check is guarded to sides of at most 15 "
                             "vertices (got " +
                             std::to_string(A) + "+" + std::to_string(B) + ")");
        // Neighbour masks of V2-side vertices within V1's index space.
        std::vector<uint32_t> nbr(idx2.size(), 0);
        for (size_t j = 0; j < idx2.size(); ++j)
            for (size_t i = 0; i < idx1.size(); ++i)
                if (g.adjacent(idx2[j], idx1[i]))
                    nbr[j] |= 1u << i;

        BestViolation best;
        std::vector<int> cnt(idx2.size());
        for (uint32_t m1 = 1; m1 < (1u << A); ++m1) {
            long long a = std::popcount(m1);
            if (!er.size_ok(a, A))
                continue;
            for (size_t j = 0; j < idx2.size(); ++j)
                cnt[j] = std::popcount(nbr[j] & m1);
            // Gray-code walk over W2 keeps e(W1,W2) incremental.
            long long e = 0;
            uint32_t prev = 0;
            for (uint32_t k = 1; k < (1u << B); ++k) {
                uint32_t gray = k ^ (k >> 1);
                uint32_t changed = gray ^ prev;
                int bit = std::countr_zero(changed);
                if (gray & changed)
                    e += cnt[static_cast<size_t>(bit)];
                else
                    e -= cnt[static_cast<size_t>(bit)];
                prev = gray;
                long long b = std::popcount(gray);
                if (!er.size_ok(b, B))
                    continue;
                ++verdict.subpairs_checked;
                long long ab = a * b;
                int128 diff = static_cast<int128>(e) * AB - static_cast<int128>(e0) * ab;
                if (diff < 0)
                    diff = -diff;
                Deviation d{static_cast<long long>(diff), ab * AB};
                if (d > max_dev)
                    max_dev = d;
                if (er.deviates(e, ab, e0, AB))
                    best.offer(d, mask_to_set(g.vertex_count(), idx1, m1),
                               mask_to_set(g.vertex_count(), idx2, gray));
            }
        }
        verdict.max_deviation = max_dev.to_double();
        if (best.any) {
            verdict.kind = RegularityKind::Irregular;
            verdict.witness = RegularityWitness{best.W1, best.W2, best.dev.to_double()};
        } else {
            verdict.kind = RegularityKind::Regular;
        }
        return verdict;
    }

    // Sampled mode: random subsets above the size floor; can only exhibit
    // irregularity or report heuristic consistency.
    SplitMix64 rng(mode.seed);
    long long s1min = A, s2min = B;
    for (long long s = 1; s <= A; ++s)
        if (er.size_ok(s, A)) {
            s1min = s;
            break;
        }
    for (long long s = 1; s <= B; ++s)
        if (er.size_ok(s, B)) {
            s2min = s;
            break;
        }
    BestViolation best;
    auto sample_side = [&](const std::vector<int>& idx, long long smin) {
        long long size = smin + static_cast<long long>(rng.next_below(
                                    static_cast<uint64_t>(idx.size() - smin + 1)));
        std::vector<int> pool = idx;
        for (long long i = 0; i < size; ++i) {
            size_t j = static_cast<size_t>(i) +
                       static_cast<size_t>(rng.next_below(pool.size() - static_cast<size_t>(i)));
            std::swap(pool[static_cast<size_t>(i)], pool[j]);
        }
        pool.resize(static_cast<size_t>(size));
        return VertexSet::from_indices(g.vertex_count(), pool);
    };
    for (long long it = 0; it < mode.samples; ++it) {
        VertexSet W1 = sample_side(idx1, s1min);
        VertexSet W2 = sample_side(idx2, s2min);
        long long a = W1.count(), b = W2.count();
        long long ew = edge_count_between(g, W1, W2);
        ++verdict.subpairs_checked;
        long long ab = a * b;
        int128 diff = static_cast<int128>(ew) * AB - static_cast<int128>(e0) * ab;
        if (diff < 0)
            diff = -diff;
        Deviation d{static_cast<long long>(diff), ab * AB};
        if (d > max_dev)
            max_dev = d;
        if (er.deviates(ew, ab, e0, AB))
            best.offer(d, W1, W2);
    }
    verdict.max_deviation = max_dev.to_double();
    if (best.any) {
        verdict.kind = RegularityKind::Irregular;
        verdict.witness = RegularityWitness{best.W1, best.W2, best.dev.to_double()};
    } else {
        verdict.kind = RegularityKind::HeuristicRegular;
    }
    return verdict;
}

bool strong_degree_condition_holds(const Graph& g, const VertexSet& A, const VertexSet& B,
                                   std::string* why) {
    long long a = A.count(), b = B.count();
    if (a == 0 || b == 0)
        throw InputError("strong degree condition needs nonempty sides");
    long long e = edge_count_between(g, A, B);
    for (int v : A.to_indices()) {
        long long cnt = intersection_count(g.row(v), B.words());
        if (cnt * 10 * a < e) {
            if (why)
                *why = "vertex " + std::to_string(v) + " keeps only " + std::to_string(cnt) +
                       " cross-neighbors";
            return false;
        }
    }
    for (int v : B.to_indices()) {
        long long cnt = intersection_count(g.row(v), A.words());
        if (cnt * 10 * b < e) {
            if (why)
                *why = "vertex " + std::to_string(v) + " keeps only " + std::to_string(cnt) +
                       " cross-neighbors";
            return false;
        }
    }
    return true;
}

StrongTrimResult strongly_regular_trim(const Graph& g, const VertexSet& V1, const VertexSet& V2,
                                       double eps) {
    if (V1.count() == 0 || V2.count() == 0)
        throw InputError("strong trim needs nonempty sides");
    if (V1.intersects(V2))
        throw InputError("strong trim needs disjoint sides");
    const EpsRational er(eps);

    StrongTrimResult res;
    res.W1 = V1;
    res.W2 = V2;
    for (;;) {
        long long a = res.W1.count(), b = res.W2.count();
        if (a == 0 || b == 0)
            throw DegeneratePairError("strong trim emptied a side");
        long long e = edge_count_between(g, res.W1, res.W2);
        std::vector<int> drop1, drop2;
        for (int v : res.W1.to_indices())
            if (static_cast<long long>(intersection_count(g.row(v), res.W2.words())) * 10 * a < e)
                drop1.push_back(v);
        for (int v : res.W2.to_indices())
            if (static_cast<long long>(intersection_count(g.row(v), res.W1.words())) * 10 * b < e)
                drop2.push_back(v);
        if (drop1.empty() && drop2.empty())
            break;
        for (int v : drop1)
            res.W1.erase(v);
        for (int v : drop2)
            res.W2.erase(v);
        ++res.rounds;
        if (res.W1.count() == 0 || res.W2.count() == 0)
            throw DegeneratePairError("strong trim emptied a side");
    }
    // |Wi| >= (1 - 2 eps) |Vi|, compared exactly.
    auto guarantee = [&](long long w, long long v) {
        return w * EpsRational::q >= (EpsRational::q - 2 * er.p) * v;
    };
    res.size_guarantee_met = guarantee(res.W1.count(), V1.count()) &&
                             guarantee(res.W2.count(), V2.count());
    return res;
}

void Partition::validate(int vertex_count) const {
    if (parts.empty())
        throw InputError("partition has no parts");
    VertexSet seen(vertex_count);
    int min_size = vertex_count + 1, max_size = 0;
    for (const VertexSet& p : parts) {
        int c = p.count();
        if (c == 0)
            throw InputError("partition has an empty part");
        min_size = std::min(min_size, c);
        max_size = std::max(max_size, c);
        if (seen.intersects(p))
            throw InputError("partition parts overlap");
        seen = seen.set_union(p);
    }
    if (seen.count() != vertex_count)
        throw InputError("partition does not cover all vertices");
    if (max_size - min_size > 1)
        throw InputError("partition part sizes differ by more than one");
}

std::string to_partition_file(const Partition& p) {
    std::ostringstream out;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        out << "part " << (i + 1) << ":";
        for (int v : p.parts[i].to_indices())
            out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

Partition from_partition_file(int vertex_count, const std::string& text) {
    Partition p;
    std::istringstream in(text);
    std::string line;
    size_t expected = 1;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string word;
        size_t index;
        char colon;
        if (!(ls >> word >> index >> std::noskipws >> colon) || word != "part" || colon != ':')
            throw InputError("partition file: expected 'part i: v v ...', got '" + line + "'");
        if (index != expected)
            throw InputError("partition file: parts must be numbered consecutively from 1");
        ++expected;
        ls >> std::skipws;
        VertexSet part(vertex_count);
        int v;
        while (ls >> v)
            part.insert(v);
        if (!ls.eof())
            throw InputError("partition file: bad vertex token in '" + line + "'");
        p.parts.push_back(std::move(part));
    }
    p.validate(vertex_count);
    return p;
}

const ReducedPair& ReducedGraph::at(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= parts || j >= parts)
        throw InputError("reduced graph pair index out of range");
    if (i > j)
        std::swap(i, j);
    return pair_info[static_cast<size_t>(j) * (j - 1) / 2 + static_cast<size_t>(i)];
}

ReducedPair& ReducedGraph::at(int i, int j) {
    return const_cast<ReducedPair&>(static_cast<const ReducedGraph&>(*this).at(i, j));
}

ReducedGraph reduced_graph(const Graph& g, const EdgeColoring& coloring, const Partition& p,
                           double eps, const RegularityMode& mode) {
    if (!coloring.matches(g))
        throw InputError("coloring does not match the host graph");
    p.validate(g.vertex_count());

    const Graph red = coloring.subgraph(Color::Red);
    const Graph blue = coloring.subgraph(Color::Blue);

    ReducedGraph out;
    out.parts = p.size();
    out.certified = mode.exhaustive;
    out.pair_info.resize(static_cast<size_t>(out.parts) * (out.parts - 1) / 2);

    for (int j = 1; j < out.parts; ++j) {
        for (int i = 0; i < j; ++i) {
            ReducedPair& info = out.at(i, j);
            const VertexSet& Pi = p.parts[static_cast<size_t>(i)];
            const VertexSet& Pj = p.parts[static_cast<size_t>(j)];
            info.red_cross = edge_count_between(red, Pi, Pj);
            info.blue_cross = edge_count_between(blue, Pi, Pj);
            long long denom = static_cast<long long>(Pi.count()) * Pj.count();
            info.red_density = Rational(info.red_cross, denom);
            info.blue_density = Rational(info.blue_cross, denom);
            RegularityVerdict vr = check_regular_pair(red, Pi, Pj, eps, mode);
            RegularityVerdict vb = check_regular_pair(blue, Pi, Pj, eps, mode);
            info.regular_both = vr.kind != RegularityKind::Irregular &&
                                vb.kind != RegularityKind::Irregular;
            if (!info.regular_both)
                info.edge = ReducedEdge::Absent;
            else
                info.edge = info.red_cross >= info.blue_cross ? ReducedEdge::Red
                                                              : ReducedEdge::Blue;
        }
    }
    return out;
}

std::optional<MatchingCertificate> property_mt(const Graph& g, double t) {
    if (!(t > 0))
        throw InputError("property M_t needs t > 0");
    const long long target = static_cast<long long>(std::ceil(t));

    std::optional<MatchingCertificate> best;
    auto comps = components_bipartiteness(g);
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        const ComponentReport& comp = comps[ci];
        if (comp.bipartite)
            continue;
        std::vector<int> verts = comp.members.to_indices();
        std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
        for (size_t k = 0; k < verts.size(); ++k)
            local[static_cast<size_t>(verts[k])] = static_cast<int>(k);
        GraphBuilder b(static_cast<int>(verts.size()));
        for (size_t k = 0; k < verts.size(); ++k)
            for (int u : g.neighbors(verts[k]))
                if (local[static_cast<size_t>(u)] > static_cast<int>(k))
                    b.add_edge(static_cast<int>(k), local[static_cast<size_t>(u)]);
        std::vector<Edge> matching = maximum_matching(b.freeze());
        int saturated = 2 * static_cast<int>(matching.size());
        if (!best || saturated > best->saturated) {
            MatchingCertificate cert;
            for (const auto& [u, v] : matching)
                cert.matching.emplace_back(verts[static_cast<size_t>(u)],
                                           verts[static_cast<size_t>(v)]);
            cert.component_index = static_cast<int>(ci);
            cert.saturated = saturated;
            cert.odd_cycle = *comp.odd_cycle;
            best = std::move(cert);
        }
    }
    if (best && best->saturated >= target)
        return best;
    return std::nullopt;
}

namespace {

struct BipartiteSplit {
    bool ok = false;
    uint32_t side_a = 0, side_b = 0;
};

// Two-colors the induced subgraph on `universe` (mask) of the mask-adjacency
// `adj`; fails on an odd cycle.
BipartiteSplit split_bipartite(const std::vector<uint32_t>& adj, uint32_t universe) {
    BipartiteSplit res;
    uint32_t rem = universe;
    while (rem) {
        uint32_t comp_a = 0, comp_b = 0;
        uint32_t frontier = 1u << std::countr_zero(rem);
        bool side = false;
        while (frontier) {
            (side ? comp_b : comp_a) |= frontier;
            uint32_t nxt = 0;
            uint32_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                if (adj[static_cast<size_t>(v)] & frontier)
                    return res; // edge inside one side
                nxt |= adj[static_cast<size_t>(v)] & universe;
            }
            frontier = nxt & ~(comp_a | comp_b);
            side = !side;
        }
        res.side_a |= comp_a;
        res.side_b |= comp_b;
        rem &= ~(comp_a | comp_b);
    }
    res.ok = true;
    return res;
}

} // namespace

std::optional<InducedBipartiteResult> find_induced_bipartite(const Graph& g,
                                                             const EdgeColoring& coloring,
                                                             Color color, int min_side,
                                                             uint64_t seed) {
    if (!coloring.matches(g))
        throw InputError("coloring does not match the host graph");
    if (min_side < 1)
        throw InputError("minimum side size must be at least 1");
    const int n = g.vertex_count();
    const Graph sub = coloring.subgraph(color);

    if (n <= 20) {
        std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
        for (const auto& [u, v] : sub.edges()) {
            adj[static_cast<size_t>(u)] |= 1u << v;
            adj[static_cast<size_t>(v)] |= 1u << u;
        }
        std::optional<InducedBipartiteResult> best;
        int best_min = -1;
        for (uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (std::popcount(mask) < 2 * min_side)
                continue;
            BipartiteSplit sp = split_bipartite(adj, mask);
            if (!sp.ok)
                continue;
            // Components may flip sides independently; balance by subset sum
            // over the achievable |W1| values.
            std::vector<std::pair<int, int>> comps;
            uint32_t rem = mask;
            while (rem) {
                uint32_t start = 1u << std::countr_zero(rem);
                // recover this component within the split
                uint32_t comp = start;
                for (;;) {
                    uint32_t grow = comp;
                    uint32_t f = comp;
                    while (f) {
                        int v = std::countr_zero(f);
                        f &= f - 1;
                        grow |= adj[static_cast<size_t>(v)] & mask;
                    }
                    if (grow == comp)
                        break;
                    comp = grow;
                }
                comps.emplace_back(std::popcount(comp & sp.side_a),
                                   std::popcount(comp & sp.side_b));
                rem &= ~comp;
            }
            uint64_t dp = 1;
            for (auto [a, b] : comps)
                dp = (dp << a) | (dp << b);
            int total = std::popcount(mask);
            int best_s = -1;
            for (int s = total / 2; s >= min_side; --s) {
                if (((dp >> s) & 1) && total - s >= min_side) {
                    best_s = s;
                    break;
                }
            }
            if (best_s < 0)
                continue;
            int quality = std::min(best_s, total - best_s);
            if (quality <= best_min)
                continue;
            // Reconstruct which components flip to reach best_s.
            VertexSet W1(n), W2(n);
            int need = best_s;
            uint64_t reach = 1;
            std::vector<uint64_t> prefix{reach};
            for (auto [a, b] : comps) {
                reach = (reach << a) | (reach << b);
                prefix.push_back(reach);
            }
            uint32_t rem2 = mask;
            std::vector<std::pair<uint32_t, uint32_t>> comp_sides;
            while (rem2) {
                uint32_t start = 1u << std::countr_zero(rem2);
                uint32_t comp = start;
                for (;;) {
                    uint32_t grow = comp;
                    uint32_t f = comp;
                    while (f) {
                        int v = std::countr_zero(f);
                        f &= f - 1;
                        grow |= adj[static_cast<size_t>(v)] & mask;
                    }
                    if (grow == comp)
                        break;
                    comp = grow;
                }
                comp_sides.emplace_back(comp & sp.side_a, comp & sp.side_b);
                rem2 &= ~comp;
            }
            for (size_t ci = comp_sides.size(); ci-- > 0;) {
                auto [ca, cb] = comp_sides[ci];
                int a = std::popcount(ca), b = std::popcount(cb);
                if (need - a >= 0 && ((prefix[ci] >> (need - a)) & 1)) {
                    for (uint32_t f = ca; f;) {
                        int v = std::countr_zero(f);
                        f &= f - 1;
                        W1.insert(v);
                    }
                    for (uint32_t f = cb; f;) {
                        int v = std::countr_zero(f);
                        f &= f - 1;
                        W2.insert(v);
                    }
                    need -= a;
                } else {
                    for (uint32_t f = cb; f;) {
                        int v = std::countr_zero(f);
                        f &= f - 1;
                        W1.insert(v);
                    }
                    for (uint32_t f = ca; f;) {
                        int v = std::countr_zero(f);
                        f &= f - 1;
                        W2.insert(v);
                    }
                    need -= b;
                }
            }
            best_min = quality;
            best = InducedBipartiteResult{std::move(W1), std::move(W2), false};
        }
        return best;
    }

    // Greedy local search with seeded restarts; results are flagged heuristic.
    SplitMix64 rng(seed);
    std::optional<InducedBipartiteResult> best;
    int best_min = -1;
    for (int restart = 0; restart < 20; ++restart) {
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(order[static_cast<size_t>(i)],
                      order[rng.next_below(static_cast<uint64_t>(i + 1))]);
        VertexSet W1(n), W2(n);
        for (int v : order) {
            bool to1 = intersection_count(sub.row(v), W1.words()) == 0;
            bool to2 = intersection_count(sub.row(v), W2.words()) == 0;
            if (to1 && to2) {
                (W1.count() <= W2.count() ? W1 : W2).insert(v);
            } else if (to1) {
                W1.insert(v);
            } else if (to2) {
                W2.insert(v);
            }
        }
        int quality = std::min(W1.count(), W2.count());
        if (quality > best_min) {
            best_min = quality;
            best = InducedBipartiteResult{std::move(W1), std::move(W2), true};
        }
    }
    if (best && best_min >= min_side)
        return best;
    return std::nullopt;
}

} // namespace cyclefit
