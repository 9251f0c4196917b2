#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclefit/coloring.hpp"
#include "cyclefit/graph.hpp"

namespace cyclefit {

// Exact rational, always normalized (gcd reduced, positive denominator).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// d(V1,V2) = e(V1,V2) / (|V1| |V2|) for disjoint nonempty sets.
Rational pair_density(const Graph& g, const VertexSet& V1, const VertexSet& V2);

enum class RegularityKind { Regular, Irregular, HeuristicRegular };

struct RegularityWitness {
    VertexSet W1, W2;
    double deviation = 0.0;
};

struct RegularityVerdict {
    RegularityKind kind = RegularityKind::Regular;
    std::optional<RegularityWitness> witness; // present iff Irregular
    double max_deviation = 0.0;               // worst |d(V1,V2) - d(W1,W2)| observed
    long long subpairs_checked = 0;
};

struct RegularityMode {
    bool exhaustive = true;
    long long samples = 10000; // sampled mode only
    uint64_t seed = 0;
};

// Exhaustive mode iterates every W1 x W2 with |Wi| >= eps|Vi| (guarded to
// sides of at most 15 vertices) and can certify Regular. Sampled mode can
// only return Irregular (with an exhibited witness) or HeuristicRegular.
// Epsilon is compared exactly after rounding to 1e-6 precision.
RegularityVerdict check_regular_pair(const Graph& g, const VertexSet& V1, const VertexSet& V2,
                                     double eps, const RegularityMode& mode = {});

struct StrongTrimResult {
    VertexSet W1, W2;
    bool size_guarantee_met = false; // |Wi| >= (1-2 eps)|Vi|
    int rounds = 0;
};

// Iteratively removes vertices with fewer than d * |other side| / 10
// cross-neighbors (d recomputed per round) until stable. Throws
// DegeneratePairError if a side empties.
StrongTrimResult strongly_regular_trim(const Graph& g, const VertexSet& V1, const VertexSet& V2,
                                       double eps);

// Every vertex of A keeps at least density * |B| / 10 neighbors in B and
// vice versa (the degree half of strong regularity; exactly checkable).
bool strong_degree_condition_holds(const Graph& g, const VertexSet& A, const VertexSet& B,
                                   std::string* why = nullptr);

struct Partition {
    std::vector<VertexSet> parts;

    int size() const { return static_cast<int>(parts.size()); }
    // Disjoint, covering, sizes differing by at most one.
    void validate(int vertex_count) const;
};

std::string to_partition_file(const Partition& p);
Partition from_partition_file(int vertex_count, const std::string& text);

enum class ReducedEdge { Absent, Red, Blue };

struct ReducedPair {
    ReducedEdge edge = ReducedEdge::Absent;
    bool regular_both = false;
    Rational red_density{0, 1};
    Rational blue_density{0, 1};
    long long red_cross = 0;
    long long blue_cross = 0;
};

struct ReducedGraph {
    int parts = 0;
    bool certified = false; // exhaustive regularity checks only
    std::vector<ReducedPair> pair_info; // triangular, index i<j

    const ReducedPair& at(int i, int j) const;
    ReducedPair& at(int i, int j);
};

// Pair edge present iff the pair is epsilon-regular in both color subgraphs;
// colored by strict majority of crossing edges, draws to Red.
ReducedGraph reduced_graph(const Graph& g, const EdgeColoring& coloring, const Partition& p,
                           double eps, const RegularityMode& mode = {});

struct MatchingCertificate {
    std::vector<Edge> matching;
    int component_index = -1;
    int saturated = 0;
    CycleWitness odd_cycle;
};

// Property M_t: a matching saturating at least ceil(t) vertices inside a
// single non-bipartite component. Returns the best certificate or nothing.
std::optional<MatchingCertificate> property_mt(const Graph& g, double t);

struct InducedBipartiteResult {
    VertexSet W1, W2;
    bool heuristic = false;
};

// Looks for disjoint W1, W2 with |Wi| >= min_side such that every edge of the
// given color inside W1 ∪ W2 crosses between them. Exact subset enumeration
// up to 20 vertices; seeded greedy local search above that (flagged).
std::optional<InducedBipartiteResult> find_induced_bipartite(const Graph& g,
                                                             const EdgeColoring& coloring,
                                                             Color color, int min_side,
                                                             uint64_t seed = 0);

} // namespace cyclefit
