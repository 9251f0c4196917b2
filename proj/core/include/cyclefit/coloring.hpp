#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cyclefit/cycles.hpp"
#include "cyclefit/graph.hpp"

namespace cyclefit {

enum class Color : uint8_t { Red = 0, Blue = 1 };

inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }
inline Color other_color(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
Color parse_color_char(char c);

// Total two-coloring of a host graph's edge set. Immutable after
// construction; the edge list is the host's canonical (lexicographic) order.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(const Graph& host, std::vector<Color> colors_by_canonical_edge);
    static EdgeColoring uniform(const Graph& host, Color c);
    static EdgeColoring paint(const Graph& host, const std::function<Color(int, int)>& rule);

    int vertex_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Color>& colors() const { return colors_; }

    bool is_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    Color at(int u, int v) const;
    long long count(Color c) const;

    // Graph on the same vertex set holding exactly the edges of one color.
    Graph subgraph(Color c) const;

    // Color-degree of v into a set.
    int colored_degree_into(const Graph& host, int v, Color c, const VertexSet& into) const;

    bool matches(const Graph& host) const;

    bool operator==(const EdgeColoring& other) const = default;

private:
    int edge_index(int u, int v) const;
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Color> colors_;
    std::vector<int32_t> index_; // triangular pair -> edge index, -1 when absent
};

// Coloring file: header "colors 2", then one line per edge "u v R|B",
// normalized ascending; must biject with the host edge set on load.
std::string to_coloring_file(const EdgeColoring& c);
EdgeColoring from_coloring_file(const Graph& host, const std::string& text);

struct AvoidanceSpec {
    int red_cycle_length = 0; // forbidden red C_n
    bool blue_all_odd = false;
    int blue_cycle_length = 0; // single forbidden odd blue length when !blue_all_odd

    static AvoidanceSpec red_and_single_blue(int n, int k);
    static AvoidanceSpec red_and_all_blue_odd(int n);
};

struct AvoidanceVerdict {
    bool clean = true;
    std::optional<std::pair<Color, CycleWitness>> violation;
};

struct ExtremalColoring {
    EdgeColoring coloring;
    int pivot = -1;        // the chosen vertex of degree <= n
    VertexSet side_prime;  // V' (the n-1 side); V'' is the complement
};

// Lower-bound coloring for a sparse graph on 2n-1 vertices: picks the least
// vertex v of degree <= n, puts all but at most one of its neighbors into an
// (n-1)-set V' (least ids first, padded with least non-neighbors), colors
// V'-V'' edges Blue and everything else Red. Inapplicable when min degree > n.
std::optional<ExtremalColoring> color_extremal_lower_bound(const Graph& g, int n);

struct BlockingColoring {
    Graph graph; // K_{2n-2}
    EdgeColoring coloring;
};

// K_{2n-2} split into halves {0..n-2} and {n-1..2n-3}: cross edges Blue,
// inside edges Red. Blocks red C_n (components of size n-1) and every odd
// blue cycle (blue side is bipartite).
BlockingColoring color_bipartite_blocking(int n, int k);

// Search for a cycle of one color; any witness re-verifies in that color.
CycleSearchResult monochromatic_cycle(const Graph& g, const EdgeColoring& coloring, Color c,
                                      int length, SearchLimits limits = {});

// Clean iff no red C_n and no blue cycle of the forbidden length(s).
// "All odd" is decided structurally via bipartiteness of the blue subgraph.
// Throws BudgetExhausted instead of ever returning clean on a partial search.
AvoidanceVerdict verify_avoidance(const Graph& g, const EdgeColoring& coloring,
                                  const AvoidanceSpec& spec, SearchLimits limits = {});

} // namespace cyclefit
