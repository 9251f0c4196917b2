#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclefit/coloring.hpp"
#include "cyclefit/graph.hpp"

namespace cyclefit {

// Thresholds for vertex classification and hub detection on a graph with
// 2n-1 vertices: red side degree 0.22n, overall side degree 0.23n, blue hub
// degree n^0.9. They only provably interact for very large n, so a
// multiplier scales all three for desk-scale experiments.
struct SideThresholds {
    double multiplier = 1.0;

    double many_red(int n) const { return 0.22 * n * multiplier; }
    double side_degree(int n) const { return 0.23 * n * multiplier; }
    double hub_blue(int n) const;
};

struct Classification {
    VertexSet W1, W2;
    std::optional<int> special;
    VertexSet unclassified;
};

// W_i = vertices with at least many_red red neighbors and at most hub_blue
// blue neighbors in V_i. A vertex short of side_degree plain neighbors in
// some V_i is reported special (the first such by id; any further ones land
// in unclassified). Buckets are disjoint and cover V.
Classification classify_vertices(const Graph& g, const EdgeColoring& coloring,
                                 const VertexSet& V1, const VertexSet& V2,
                                 const SideThresholds& thr = {});

enum class PathBuildStatus {
    Ok,
    ParityError,
    LengthCapError,
    StrongDegreeError,
    DeadEnd,
};

std::string to_string(PathBuildStatus s);

struct PathBuildResult {
    PathBuildStatus status = PathBuildStatus::DeadEnd;
    std::vector<int> path; // length+1 vertices when Ok
    std::string detail;
};

struct PathBuildOptions {
    double eps = 0.05;       // sets the length cap 2(1 - 2 eps / d) min(|A|,|B|)
    bool check_strong_degree = true;
    uint64_t backtrack_budget_per_length = 200;
};

// Path of exactly `length` edges from u to v alternating between A and B in
// the given color. Cross endpoints need odd length, same-side endpoints even.
// Greedy most-unused-neighbors extension with bounded backtracking; a dead
// end triggers one restart with the endpoints reversed. Output re-verified.
PathBuildResult bipartite_path_builder(const Graph& g, const EdgeColoring& coloring, Color color,
                                       const VertexSet& A, const VertexSet& B, int u, int v,
                                       int length, const PathBuildOptions& opts = {});

struct SpectrumGap {
    int length = 0;
    std::string reason;
};

struct SpectrumBuildResult {
    std::map<int, CycleWitness> cycles;
    std::vector<SpectrumGap> gaps;
    bool complete(int lo, int hi) const;
};

// Blue cycles of every length 3..n: even lengths close a blue cross edge of
// (V1,V2) with an odd path, odd lengths route through the hub, triangles scan
// the hub's two blue neighborhoods for a crossing blue edge. The hub needs at
// least hub_blue blue neighbors on each side.
SpectrumBuildResult build_blue_spectrum(const Graph& g, const EdgeColoring& coloring,
                                        const VertexSet& V1, const VertexSet& V2, int hub,
                                        const SideThresholds& thr = {},
                                        const PathBuildOptions& path_opts = {});

// Endgame seed: blue edges s-w, w-v1, v1-s give the triangle; s-w, w-v1,
// v1-v2, v2-v3, v3-s give the 5-cycle; longer odd cycles close the 4-edge
// path v3-s-w-v1-v2, even cycles close the edge v2-v3.
struct EndgameSeed {
    int s = -1, w = -1, v1 = -1, v2 = -1, v3 = -1;
};

SpectrumBuildResult build_blue_spectrum_endgame(const Graph& g, const EdgeColoring& coloring,
                                                const VertexSet& V1, const VertexSet& V2,
                                                const EndgameSeed& seed,
                                                const PathBuildOptions& path_opts = {});

// Extends a cycle by one vertex: w outside the cycle with two neighbors on it
// whose cycle predecessors lie in V_i and are themselves adjacent. Returns
// the length+1 cycle, or nothing when no qualifying pair exists.
std::optional<CycleWitness> rotation_extend(const Graph& g_red, const CycleWitness& cycle, int w,
                                            const VertexSet& V_i);

struct PancyclicOptions {
    PathBuildOptions path;
    uint64_t split_seed = 0;
    std::optional<int> external_vertex; // adds |W_i|+1 when it has 2 red neighbors in W_i
};

// Red cycles of every length 3..|W_i|: short and medium lengths via a
// balanced split of V_i around a chosen center, long lengths by repeated
// rotation extension. Gaps are explicit; every witness re-verified.
SpectrumBuildResult build_red_pancyclic(const Graph& g, const EdgeColoring& coloring,
                                        const VertexSet& W_i, const VertexSet& V_i,
                                        const SideThresholds& thr = {},
                                        const PancyclicOptions& opts = {});

} // namespace cyclefit
