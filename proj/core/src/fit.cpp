#include "cyclefit/fit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cyclefit/prng.hpp"

namespace cyclefit {

void ToleranceProfile::validate() const {
    auto in_range = [](double e) { return e > 0.0 && e < 2.0; };
    if (!in_range(deg_exponent) || !in_range(codeg_exponent) || !in_range(disc_exponent))
        throw InputError("tolerance exponents must lie in (0,2)");
    if (multiplier <= 0.0)
        throw InputError("tolerance multiplier must be positive");
}

double ToleranceProfile::degree_threshold(int n) const {
    return multiplier * std::pow(n, deg_exponent);
}
double ToleranceProfile::codegree_sample_threshold(int n) const {
    return multiplier * std::pow(n, deg_exponent);
}
double ToleranceProfile::discrepancy_sample_threshold(int n) const {
    return multiplier * std::pow(n, deg_exponent + 1.0);
}
double ToleranceProfile::codegree_threshold(int n) const {
    return multiplier * std::pow(n, codeg_exponent);
}
double ToleranceProfile::discrepancy_threshold(int n) const {
    return multiplier * std::pow(n, disc_exponent);
}

TargetDegreeProfile TargetDegreeProfile::for_n(int n) {
    if (n < 2)
        throw InputError("degree profile needs n >= 2");
    return TargetDegreeProfile{n};
}

long long TargetDegreeProfile::edge_target() const {
    long long prod = static_cast<long long>(n + 1) * (2 * n - 1);
    return (prod + 1) / 2;
}

void RepairLog::append(const RepairLog& later) {
    ops.insert(ops.end(), later.ops.begin(), later.ops.end());
    trim_count += later.trim_count;
    switch_count += later.switch_count;
    max_trim_touch = std::max(max_trim_touch, later.max_trim_touch);
    if (!later.touch.empty())
        touch = later.touch;
}

Graph replay_repair_log(const Graph& sampled, const RepairLog& log) {
    GraphBuilder b(sampled);
    for (const RepairOp& op : log.ops) {
        switch (op.kind) {
        case RepairOp::Kind::Trim:
            b.remove_edge(op.vertex, op.peer);
            break;
        case RepairOp::Kind::Switch:
            b.remove_edge(op.peer, op.peer2);
            b.add_edge(op.vertex, op.peer);
            b.add_edge(op.partner, op.peer2);
            break;
        case RepairOp::Kind::DegenerateSwitch:
            b.remove_edge(op.peer, op.peer2);
            b.add_edge(op.vertex, op.peer);
            b.add_edge(op.vertex, op.peer2);
            break;
        case RepairOp::Kind::DirectAdd:
            b.add_edge(op.vertex, op.partner);
            break;
        }
    }
    return b.freeze();
}

Graph sample_uniform_graph(int n, uint64_t seed) {
    if (n < 2)
        throw InputError("sample_uniform_graph needs n >= 2");
    const int vertices = 2 * n - 1;
    SplitMix64 rng(seed);
    GraphBuilder b(vertices);
    for (int u = 0; u < vertices; ++u)
        for (int v = u + 1; v < vertices; ++v)
            if (rng.coin())
                b.add_edge(u, v);
    return b.freeze();
}

namespace {

VertexSet random_subset(int universe, SplitMix64& rng) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v)
        if (rng.coin())
            s.insert(v);
    return s;
}

std::string subset_witness(const VertexSet& S, const VertexSet& T, double dev) {
    std::ostringstream out;
    out << "|S|=" << S.count() << " |T|=" << T.count() << " deviation=" << dev;
    if (S.universe() <= 40) {
        out << " S={";
        bool first = true;
        for (int v : S.to_indices()) {
            out << (first ? "" : ",") << v;
            first = false;
        }
        out << "} T={";
        first = true;
        for (int v : T.to_indices()) {
            out << (first ? "" : ",") << v;
            first = false;
        }
        out << "}";
    }
    return out.str();
}

} // namespace

PseudorandomReport check_pseudorandom_properties(const Graph& g, int n,
                                                 const ToleranceProfile& tol,
                                                 const SamplingOptions& opts) {
    tol.validate();
    const int vertices = 2 * n - 1;
    if (g.vertex_count() != vertices)
        throw InputError("graph has " + std::to_string(g.vertex_count()) +
                         " vertices, expected 2n-1 = " + std::to_string(vertices));

    PseudorandomReport report;

    report.degrees.threshold = tol.degree_threshold(n);
    for (int v = 0; v < vertices; ++v) {
        double dev = std::abs(g.degree(v) - static_cast<double>(n));
        if (dev > report.degrees.worst_deviation) {
            report.degrees.worst_deviation = dev;
            report.degrees.worst_witness =
                "vertex " + std::to_string(v) + " degree " + std::to_string(g.degree(v));
        }
    }
    report.degrees.pass = report.degrees.worst_deviation <= report.degrees.threshold;

    report.codegrees.threshold = tol.codegree_sample_threshold(n);
    for (int v = 0; v < vertices; ++v) {
        for (int w = v + 1; w < vertices; ++w) {
            double dev = std::abs(codegree(g, v, w) - n / 2.0);
            if (dev > report.codegrees.worst_deviation) {
                report.codegrees.worst_deviation = dev;
                report.codegrees.worst_witness =
                    "pair (" + std::to_string(v) + "," + std::to_string(w) + ") codegree " +
                    std::to_string(codegree(g, v, w));
            }
        }
    }
    report.codegrees.pass = report.codegrees.worst_deviation <= report.codegrees.threshold;

    report.discrepancy.threshold = tol.discrepancy_sample_threshold(n);
    SplitMix64 rng(opts.seed);
    report.sampled_pairs = opts.pairs;
    for (long long i = 0; i < opts.pairs; ++i) {
        VertexSet S = random_subset(vertices, rng);
        VertexSet T = random_subset(vertices, rng);
        double expected = static_cast<double>(S.count()) * T.count() / 2.0;
        double dev = std::abs(edge_count_between(g, S, T) - expected);
        if (dev > report.discrepancy.worst_deviation) {
            report.discrepancy.worst_deviation = dev;
            report.discrepancy.worst_witness = subset_witness(S, T, dev);
        }
    }
    report.discrepancy.pass = report.discrepancy.worst_deviation <= report.discrepancy.threshold;

    return report;
}

TrimResult trim_surplus_edges(const Graph& g, const TargetDegreeProfile& profile) {
    if (g.vertex_count() != profile.vertex_count())
        throw InputError("graph size does not match the degree profile");
    GraphBuilder b(g);
    RepairLog log;
    log.touch.assign(static_cast<size_t>(g.vertex_count()), 0);

    for (int v = 0; v < g.vertex_count(); ++v) {
        while (b.degree(v) > profile.target(v)) {
            int best = -1;
            for (int w = 0; w < g.vertex_count(); ++w) {
                if (!b.adjacent(v, w))
                    continue;
                if (best < 0 || log.touch[static_cast<size_t>(w)] <
                                    log.touch[static_cast<size_t>(best)])
                    best = w;
            }
            b.remove_edge(v, best);
            ++log.touch[static_cast<size_t>(v)];
            ++log.touch[static_cast<size_t>(best)];
            log.ops.push_back({RepairOp::Kind::Trim, v, -1, best, -1});
            ++log.trim_count;
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        log.max_trim_touch = std::max(log.max_trim_touch, log.touch[static_cast<size_t>(v)]);
    return TrimResult{b.freeze(), std::move(log)};
}

namespace {

// The ceil(n/10) candidates with the lowest touch counts, ties to smaller id.
std::vector<int> least_touched(const std::vector<int>& candidates, const std::vector<int>& touch,
                               size_t how_many) {
    std::vector<int> sorted = candidates;
    std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) {
        return touch[static_cast<size_t>(a)] != touch[static_cast<size_t>(b)]
                   ? touch[static_cast<size_t>(a)] < touch[static_cast<size_t>(b)]
                   : a < b;
    });
    if (sorted.size() > how_many)
        sorted.resize(how_many);
    return sorted;
}

std::optional<Edge> find_crossing_edge(const GraphBuilder& b, const std::vector<int>& left,
                                       const std::vector<int>& right, size_t start_offset) {
    if (left.empty() || right.empty())
        return std::nullopt;
    for (size_t k = 0; k < left.size(); ++k) {
        int w1 = left[(k + start_offset) % left.size()];
        for (int w2 : right)
            if (b.adjacent(w1, w2))
                return Edge{w1, w2};
    }
    return std::nullopt;
}

} // namespace

SwitchResult switch_repair(const Graph& g, const TargetDegreeProfile& profile, uint64_t seed,
                           const std::vector<int>* initial_touch) {
    const int vertices = profile.vertex_count();
    if (g.vertex_count() != vertices)
        throw InputError("graph size does not match the degree profile");

    long long total_deficiency = 0;
    for (int v = 0; v < vertices; ++v) {
        int d = profile.target(v) - g.degree(v);
        if (d < 0)
            throw InputError("vertex " + std::to_string(v) +
                             " exceeds its target degree; trim first");
        total_deficiency += d;
    }
    if (total_deficiency % 2 != 0)
        throw InputError("total deficiency is odd; cannot reach the target degree sum");

    SwitchResult result;
    result.log.touch = initial_touch ? *initial_touch
                                     : std::vector<int>(static_cast<size_t>(vertices), 0);
    GraphBuilder b(g);
    SplitMix64 rng(seed);
    auto& touch = result.log.touch;

    std::vector<int> deficit(static_cast<size_t>(vertices));
    for (int v = 0; v < vertices; ++v)
        deficit[static_cast<size_t>(v)] = profile.target(v) - b.degree(v);

    const size_t candidate_count = static_cast<size_t>((profile.n + 9) / 10);
    long long guard = total_deficiency / 2 + 1;

    while (guard-- > 0) {
        // The two most deficient vertices, ties by id.
        int v1 = -1, v2 = -1;
        for (int v = 0; v < vertices; ++v) {
            if (deficit[static_cast<size_t>(v)] <= 0)
                continue;
            if (v1 < 0 || deficit[static_cast<size_t>(v)] > deficit[static_cast<size_t>(v1)])
                v1 = v;
        }
        if (v1 < 0)
            break; // all targets met
        for (int v = 0; v < vertices; ++v) {
            if (v == v1 || deficit[static_cast<size_t>(v)] <= 0)
                continue;
            if (v2 < 0 || deficit[static_cast<size_t>(v)] > deficit[static_cast<size_t>(v2)])
                v2 = v;
        }

        if (v2 < 0) {
            // One deficient vertex left; absorb both ends of an edge between
            // its non-neighbors, which preserves their degrees.
            int bw1 = -1, bw2 = -1;
            long long best_key = -1;
            for (int w1 = 0; w1 < vertices; ++w1) {
                if (w1 == v1 || b.adjacent(v1, w1))
                    continue;
                for (int w2 = w1 + 1; w2 < vertices; ++w2) {
                    if (w2 == v1 || b.adjacent(v1, w2) || !b.adjacent(w1, w2))
                        continue;
                    long long key = static_cast<long long>(touch[static_cast<size_t>(w1)]) +
                                    touch[static_cast<size_t>(w2)];
                    if (best_key < 0 || key < best_key) {
                        best_key = key;
                        bw1 = w1;
                        bw2 = w2;
                    }
                }
            }
            if (bw1 < 0) {
                result.error = "no edge among non-neighbors of vertex " + std::to_string(v1);
                return result;
            }
            b.remove_edge(bw1, bw2);
            b.add_edge(v1, bw1);
            b.add_edge(v1, bw2);
            touch[static_cast<size_t>(bw1)] += 2;
            touch[static_cast<size_t>(bw2)] += 2;
            touch[static_cast<size_t>(v1)] += 2;
            deficit[static_cast<size_t>(v1)] -= 2;
            result.log.ops.push_back({RepairOp::Kind::DegenerateSwitch, v1, -1, bw1, bw2});
            ++result.log.switch_count;
            continue;
        }

        std::vector<int> from2, from1;
        for (int w = 0; w < vertices; ++w) {
            if (w == v1 || w == v2)
                continue;
            bool n1 = b.adjacent(v1, w), n2 = b.adjacent(v2, w);
            if (n2 && !n1)
                from2.push_back(w); // candidates for W': gain edge to v1
            else if (n1 && !n2)
                from1.push_back(w); // candidates for W'': gain edge to v2
        }
        std::vector<int> w_prime = least_touched(from2, touch, candidate_count);
        std::vector<int> w_second = least_touched(from1, touch, candidate_count);

        size_t offset = w_prime.empty() ? 0 : rng.next_below(w_prime.size());
        std::optional<Edge> pick = find_crossing_edge(b, w_prime, w_second, offset);
        if (!pick)
            pick = find_crossing_edge(b, from2, from1, 0); // widen once
        if (!pick) {
            if (!b.adjacent(v1, v2)) {
                b.add_edge(v1, v2);
                touch[static_cast<size_t>(v1)] += 1;
                touch[static_cast<size_t>(v2)] += 1;
                deficit[static_cast<size_t>(v1)] -= 1;
                deficit[static_cast<size_t>(v2)] -= 1;
                result.log.ops.push_back({RepairOp::Kind::DirectAdd, v1, v2, -1, -1});
                ++result.log.switch_count;
                continue;
            }
            result.error = "no switching edge between candidate sets of vertices " +
                           std::to_string(v1) + " and " + std::to_string(v2);
            return result;
        }
        auto [w1, w2] = *pick;
        b.remove_edge(w1, w2);
        b.add_edge(v1, w1);
        b.add_edge(v2, w2);
        touch[static_cast<size_t>(w1)] += 2;
        touch[static_cast<size_t>(w2)] += 2;
        touch[static_cast<size_t>(v1)] += 1;
        touch[static_cast<size_t>(v2)] += 1;
        deficit[static_cast<size_t>(v1)] -= 1;
        deficit[static_cast<size_t>(v2)] -= 1;
        result.log.ops.push_back({RepairOp::Kind::Switch, v1, v2, w1, w2});
        ++result.log.switch_count;
    }

    for (int v = 0; v < vertices; ++v) {
        if (b.degree(v) != profile.target(v)) {
            result.error = "switching stalled before vertex " + std::to_string(v) +
                           " reached its target";
            return result;
        }
    }
    result.ok = true;
    result.graph = b.freeze();
    return result;
}

std::string to_string(ConditionStatus s) {
    switch (s) {
    case ConditionStatus::Proven:
        return "proven";
    case ConditionStatus::SampledConsistent:
        return "sampled-consistent";
    case ConditionStatus::Failed:
        return "failed";
    }
    return "?";
}

bool FitCertificate::all_proven() const {
    return count_condition.status == ConditionStatus::Proven &&
           degree_condition.status == ConditionStatus::Proven &&
           codegree_condition.status == ConditionStatus::Proven &&
           discrepancy_condition.status == ConditionStatus::Proven;
}

bool FitCertificate::any_failed() const {
    return count_condition.status == ConditionStatus::Failed ||
           degree_condition.status == ConditionStatus::Failed ||
           codegree_condition.status == ConditionStatus::Failed ||
           discrepancy_condition.status == ConditionStatus::Failed;
}

FitCertificate certify_fit(const Graph& g, int n, const ToleranceProfile& tol,
                           const CertifyOptions& opts) {
    tol.validate();
    if (n < 2)
        throw InputError("certify_fit needs n >= 2");
    FitCertificate cert;
    cert.n = n;
    cert.seed = opts.seed;

    const TargetDegreeProfile profile = TargetDegreeProfile::for_n(n);
    const int vertices = profile.vertex_count();

    // (A) exact counts.
    {
        ConditionReport& a = cert.count_condition;
        long long vdiff = std::abs(g.vertex_count() - vertices);
        long long ediff = std::abs(g.edge_count() - profile.edge_target());
        a.threshold = 0.0;
        a.worst_deviation = static_cast<double>(std::max(vdiff, ediff));
        a.slack = -a.worst_deviation;
        a.status = (vdiff == 0 && ediff == 0) ? ConditionStatus::Proven : ConditionStatus::Failed;
        if (a.status == ConditionStatus::Failed) {
            std::ostringstream w;
            w << "have " << g.vertex_count() << " vertices / " << g.edge_count()
              << " edges, want " << vertices << " / " << profile.edge_target();
            a.witness = w.str();
        }
    }

    // (B) exact degree sequence: all n+1, plus a single n+2 when n is even.
    {
        ConditionReport& bc = cert.degree_condition;
        bc.threshold = 0.0;
        int bumped = 0;
        int offender = -1;
        double worst = 0.0;
        if (g.vertex_count() == vertices) {
            for (int v = 0; v < vertices; ++v) {
                int d = g.degree(v);
                if (d == n + 1)
                    continue;
                if (d == n + 2 && n % 2 == 0) {
                    ++bumped;
                    continue;
                }
                if (offender < 0)
                    offender = v;
                worst = std::max(worst, std::abs(d - (n + 1.0)));
            }
            bool ok = offender < 0 && bumped == (n % 2 == 0 ? 1 : 0);
            if (offender < 0 && !ok && n % 2 == 0) {
                worst = 1.0;
                offender = -2; // wrong count of n+2 vertices
            }
            bc.status = ok ? ConditionStatus::Proven : ConditionStatus::Failed;
            if (!ok) {
                if (offender >= 0)
                    bc.witness = "vertex " + std::to_string(offender) + " has degree " +
                                 std::to_string(g.degree(offender));
                else
                    bc.witness = std::to_string(bumped) + " vertices of degree n+2, want 1";
            }
        } else {
            bc.status = ConditionStatus::Failed;
            bc.witness = "wrong vertex count";
            worst = 1.0;
        }
        bc.worst_deviation = worst;
        bc.slack = -worst;
    }

    // (C) exhaustive codegree scan.
    {
        ConditionReport& c = cert.codegree_condition;
        c.threshold = tol.codegree_threshold(n);
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (int w = v + 1; w < g.vertex_count(); ++w) {
                double dev = std::abs(codegree(g, v, w) - n / 2.0);
                if (dev > c.worst_deviation) {
                    c.worst_deviation = dev;
                    c.witness = "pair (" + std::to_string(v) + "," + std::to_string(w) +
                                ") codegree " + std::to_string(codegree(g, v, w));
                }
            }
        }
        c.slack = c.threshold - c.worst_deviation;
        c.status = c.worst_deviation <= c.threshold ? ConditionStatus::Proven
                                                    : ConditionStatus::Failed;
    }

    // (D) spectral certificate first, then sampled consistency.
    {
        ConditionReport& d = cert.discrepancy_condition;
        d.threshold = tol.discrepancy_threshold(n);
        cert.spectral = spectral_discrepancy_bound(g, opts.spectral);
        double implied = cert.spectral.discrepancy_bound(g.vertex_count());
        if (implied <= d.threshold) {
            d.status = ConditionStatus::Proven;
            d.worst_deviation = implied;
            d.slack = d.threshold - implied;
            std::ostringstream w;
            w << "spectral certificate: bound " << implied << " <= " << d.threshold;
            d.witness = w.str();
        } else {
            SplitMix64 rng(opts.seed);
            cert.sampled_pairs = opts.sample_pairs;
            VertexSet worst_s, worst_t;
            for (long long i = 0; i < opts.sample_pairs; ++i) {
                VertexSet S = random_subset(g.vertex_count(), rng);
                VertexSet T = random_subset(g.vertex_count(), rng);
                double expected = static_cast<double>(S.count()) * T.count() / 2.0;
                double dev = std::abs(edge_count_between(g, S, T) - expected);
                if (dev > d.worst_deviation) {
                    d.worst_deviation = dev;
                    worst_s = S;
                    worst_t = T;
                }
            }
            d.slack = d.threshold - d.worst_deviation;
            if (d.worst_deviation <= d.threshold) {
                d.status = ConditionStatus::SampledConsistent;
                d.witness = "worst of " + std::to_string(opts.sample_pairs) + " sampled pairs: " +
                            subset_witness(worst_s, worst_t, d.worst_deviation);
            } else {
                d.status = ConditionStatus::Failed;
                d.witness = subset_witness(worst_s, worst_t, d.worst_deviation);
            }
        }
    }

    return cert;
}

FitBuildResult build_fit_graph(int n, uint64_t seed, const ToleranceProfile& tol,
                               const FitBuildOptions& opts) {
    tol.validate();
    if (n < 3)
        throw InputError("build_fit_graph needs n >= 3");
    if (opts.max_retries < 0)
        throw InputError("max_retries must be non-negative");

    const TargetDegreeProfile profile = TargetDegreeProfile::for_n(n);
    FitBuildResult result;

    for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
        const uint64_t attempt_seed = seed + static_cast<uint64_t>(attempt);
        Graph sampled = sample_uniform_graph(n, attempt_seed);

        SamplingOptions sampling = opts.sampling;
        sampling.seed = attempt_seed;
        PseudorandomReport pre = check_pseudorandom_properties(sampled, n, tol, sampling);
        if (!pre.all_pass()) {
            result.failure_reason = "sampling properties failed at seed " +
                                    std::to_string(attempt_seed);
            continue;
        }

        TrimResult trimmed = trim_surplus_edges(sampled, profile);
        SwitchResult switched =
            switch_repair(trimmed.graph, profile, attempt_seed, &trimmed.log.touch);
        if (!switched.ok) {
            result.failure_reason = "switch repair failed at seed " +
                                    std::to_string(attempt_seed) + ": " + switched.error;
            continue;
        }

        RepairLog log = trimmed.log;
        log.append(switched.log);

        // Hard invariant: the repaired degree sequence matches the profile.
        for (int v = 0; v < profile.vertex_count(); ++v)
            if (switched.graph.degree(v) != profile.target(v))
                throw std::logic_error("internal error: switch repair missed its target");

        CertifyOptions certify = opts.certify;
        certify.seed = attempt_seed;
        FitCertificate cert = certify_fit(switched.graph, n, tol, certify);
        cert.seed = attempt_seed;
        cert.retries_used = attempt;
        cert.repair.trim_count = log.trim_count;
        cert.repair.switch_count = log.switch_count;
        cert.repair.max_trim_touch = log.max_trim_touch;
        cert.repair.max_touch =
            log.touch.empty() ? 0 : *std::max_element(log.touch.begin(), log.touch.end());
        cert.repair.trim_touch_alert =
            cert.repair.max_trim_touch > tol.multiplier * 7.0 * std::pow(n, 0.6);

        result.certificate = cert;
        result.graph = switched.graph;
        result.repair_log = std::move(log);
        result.accepted_seed = attempt_seed;

        if (cert.any_failed()) {
            result.failure_reason = "certification failed at seed " +
                                    std::to_string(attempt_seed);
            continue;
        }
        result.success = true;
        result.failure_reason.clear();
        return result;
    }
    return result;
}

} // namespace cyclefit
