#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclefit/graph.hpp"
#include "cyclefit/spectral.hpp"

namespace cyclefit {

// Thresholds for an n-fit build. The sampling stage checks degrees and
// codegrees against multiplier * n^deg_exponent and set discrepancy against
// multiplier * n^(deg_exponent + 1); the final certificate checks codegrees
// against multiplier * n^codeg_exponent and discrepancy against
// multiplier * n^disc_exponent. The exponents are asymptotic by nature, so
// the multiplier is the honest desk-scale knob and every report carries the
// measured slack.
struct ToleranceProfile {
    double deg_exponent = 0.6;
    double codeg_exponent = 0.7;
    double disc_exponent = 1.7;
    double multiplier = 1.0;

    void validate() const;
    double degree_threshold(int n) const;          // (a)
    double codegree_sample_threshold(int n) const; // (b)
    double discrepancy_sample_threshold(int n) const; // (c)
    double codegree_threshold(int n) const;        // (C)
    double discrepancy_threshold(int n) const;     // (D)
};

// Degree targets on 2n-1 vertices: n+1 everywhere, vertex 0 bumped to n+2
// when n is even so the degree sum is even.
struct TargetDegreeProfile {
    int n = 0;
    static TargetDegreeProfile for_n(int n);
    int vertex_count() const { return 2 * n - 1; }
    int target(int v) const { return (n % 2 == 0 && v == 0) ? n + 2 : n + 1; }
    long long edge_target() const; // ceil((n+1)(2n-1)/2)
};

struct RepairOp {
    enum class Kind { Trim, Switch, DegenerateSwitch, DirectAdd };
    Kind kind;
    // Trim: removed edge (vertex, peer).
    // Switch: deficient pair (vertex, partner); deleted edge (peer, peer2);
    //         added edges vertex-peer and partner-peer2.
    // DegenerateSwitch: single deficient vertex; deleted edge (peer, peer2);
    //         added edges vertex-peer and vertex-peer2.
    // DirectAdd: added edge (vertex, partner). Last resort when the deficient
    //         pair is non-adjacent and no switching edge exists even after
    //         widening; at tiny n the final deficient pair can be exactly the
    //         pair missing its mutual edge, which no switch can supply.
    int vertex = -1;
    int partner = -1;
    int peer = -1;
    int peer2 = -1;
};

struct RepairLog {
    std::vector<RepairOp> ops;
    std::vector<int> touch; // per-vertex count of incident edge changes
    int trim_count = 0;
    int switch_count = 0;
    int max_trim_touch = 0; // worst per-vertex touch count during the trim phase

    void append(const RepairLog& later);
};

// Applies a repair log to the graph it was recorded from; replay must
// reproduce the repaired graph bit-exactly.
Graph replay_repair_log(const Graph& sampled, const RepairLog& log);

// Graph on 2n-1 vertices; each pair (u,v), u < v, drawn in lexicographic
// order from SplitMix64(seed), included iff the draw is below half.
Graph sample_uniform_graph(int n, uint64_t seed);

struct PropertyCheck {
    bool pass = true;
    double threshold = 0.0;
    double worst_deviation = 0.0;
    std::string worst_witness;
};

struct PseudorandomReport {
    PropertyCheck degrees;     // (a)
    PropertyCheck codegrees;   // (b)
    PropertyCheck discrepancy; // (c), sampled
    long long sampled_pairs = 0;
    bool all_pass() const { return degrees.pass && codegrees.pass && discrepancy.pass; }
};

struct SamplingOptions {
    long long pairs = 10000;
    uint64_t seed = 0;
};

PseudorandomReport check_pseudorandom_properties(const Graph& g, int n,
                                                 const ToleranceProfile& tol,
                                                 const SamplingOptions& opts = {});

struct TrimResult {
    Graph graph;
    RepairLog log;
};

// Removes surplus edges until every degree is at or below its target.
// Vertices are processed in increasing id; each removal goes to the neighbor
// with the smallest touch count, ties to the smaller id.
TrimResult trim_surplus_edges(const Graph& g, const TargetDegreeProfile& profile);

struct SwitchResult {
    bool ok = false;
    Graph graph;
    RepairLog log;
    std::string error;
};

// Raises deficient degrees to their exact targets by switching: pick the two
// most deficient vertices v', v'', take the ceil(n/10) least-touched
// candidates W' from N(v'') \ N(v') and W'' from N(v') \ N(v''), find an edge
// w'w'' between them, delete it and add v'w', v''w''. A single deficient
// vertex (by an even amount) instead absorbs both ends of an edge between its
// non-neighbors. No crossing edge after widening to the full candidate sets
// is a repair failure; the caller retries with a new seed.
SwitchResult switch_repair(const Graph& g, const TargetDegreeProfile& profile, uint64_t seed,
                           const std::vector<int>* initial_touch = nullptr);

enum class ConditionStatus { Proven, SampledConsistent, Failed };

std::string to_string(ConditionStatus s);

struct ConditionReport {
    ConditionStatus status = ConditionStatus::Failed;
    double threshold = 0.0;
    double worst_deviation = 0.0;
    double slack = 0.0; // threshold - worst observed deviation
    std::string witness;
};

struct RepairSummary {
    int trim_count = 0;
    int switch_count = 0;
    int max_trim_touch = 0;
    int max_touch = 0;
    bool trim_touch_alert = false; // max trim touch exceeded multiplier * 7 n^0.6
};

struct FitCertificate {
    int n = 0;
    uint64_t seed = 0;
    int retries_used = 0;
    ConditionReport count_condition;      // (A) vertex and edge counts
    ConditionReport degree_condition;     // (B) exact degree sequence
    ConditionReport codegree_condition;   // (C) all codegrees near n/2
    ConditionReport discrepancy_condition; // (D) set-pair discrepancy
    SpectralReport spectral;
    long long sampled_pairs = 0;
    RepairSummary repair;

    bool all_proven() const;
    bool any_failed() const;
};

struct CertifyOptions {
    long long sample_pairs = 10000;
    uint64_t seed = 0;
    SpectralOptions spectral;
};

// (A) and (B) are exact checks; (C) is an exhaustive codegree scan; (D) is
// proven when the spectral certificate covers the threshold, else
// sampled-consistent over random pairs, else failed with a witness pair.
FitCertificate certify_fit(const Graph& g, int n, const ToleranceProfile& tol,
                           const CertifyOptions& opts = {});

struct FitBuildResult {
    bool success = false;
    Graph graph;
    FitCertificate certificate;
    RepairLog repair_log;
    uint64_t accepted_seed = 0;
    std::string failure_reason; // set when !success
};

struct FitBuildOptions {
    int max_retries = 3;
    SamplingOptions sampling;
    CertifyOptions certify;
};

// sample -> check (a)-(c) -> trim -> switch -> certify, retrying with seed+1
// on any stage failure. On success the certificate records the accepted seed
// and the repair log replays bit-exactly.
FitBuildResult build_fit_graph(int n, uint64_t seed, const ToleranceProfile& tol,
                               const FitBuildOptions& opts = {});

} // namespace cyclefit
