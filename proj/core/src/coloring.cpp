#include "cyclefit/coloring.hpp"

#include <algorithm>
#include <sstream>

#include "cyclefit/named_graphs.hpp"

namespace cyclefit {

Color parse_color_char(char c) {
    if (c == 'R')
        return Color::Red;
    if (c == 'B')
        return Color::Blue;
    throw InputError(std::string("unknown color character '") + c + "' (expect R or B)");
}

EdgeColoring::EdgeColoring(const Graph& host, std::vector<Color> colors_by_canonical_edge)
    : n_(host.vertex_count()), edges_(host.edges()), colors_(std::move(colors_by_canonical_edge)) {
    if (colors_.size() != edges_.size())
        throw InputError("coloring size " + std::to_string(colors_.size()) +
                         " does not match edge count " + std::to_string(edges_.size()));
    index_.assign(static_cast<size_t>(n_) * (n_ > 0 ? static_cast<size_t>(n_ - 1) : 0) / 2, -1);
    for (size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        index_[static_cast<size_t>(v) * (v - 1) / 2 + static_cast<size_t>(u)] =
            static_cast<int32_t>(i);
    }
}

EdgeColoring EdgeColoring::uniform(const Graph& host, Color c) {
    return EdgeColoring(host,
                        std::vector<Color>(static_cast<size_t>(host.edge_count()), c));
}

EdgeColoring EdgeColoring::paint(const Graph& host, const std::function<Color(int, int)>& rule) {
    std::vector<Color> colors;
    colors.reserve(static_cast<size_t>(host.edge_count()));
    for (const auto& [u, v] : host.edges())
        colors.push_back(rule(u, v));
    return EdgeColoring(host, std::move(colors));
}

int EdgeColoring::edge_index(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        return -1;
    if (u > v)
        std::swap(u, v);
    return index_[static_cast<size_t>(v) * (v - 1) / 2 + static_cast<size_t>(u)];
}

Color EdgeColoring::at(int u, int v) const {
    int idx = edge_index(u, v);
    if (idx < 0)
        throw InputError("(" + std::to_string(u) + "," + std::to_string(v) +
                         ") is not an edge of the colored graph");
    return colors_[static_cast<size_t>(idx)];
}

long long EdgeColoring::count(Color c) const {
    return static_cast<long long>(std::count(colors_.begin(), colors_.end(), c));
}

Graph EdgeColoring::subgraph(Color c) const {
    GraphBuilder b(n_);
    for (size_t i = 0; i < edges_.size(); ++i)
        if (colors_[i] == c)
            b.add_edge(edges_[i].first, edges_[i].second);
    return b.freeze();
}

int EdgeColoring::colored_degree_into(const Graph& host, int v, Color c,
                                      const VertexSet& into) const {
    host.check_vertex(v);
    int count = 0;
    for (int u : host.neighbors(v))
        if (into.contains(u) && at(v, u) == c)
            ++count;
    return count;
}

bool EdgeColoring::matches(const Graph& host) const {
    return host.vertex_count() == n_ && host.edges() == edges_;
}

std::string to_coloring_file(const EdgeColoring& c) {
    std::ostringstream out;
    out << "colors 2\n";
    for (size_t i = 0; i < c.edges().size(); ++i)
        out << c.edges()[i].first << ' ' << c.edges()[i].second << ' '
            << color_char(c.colors()[i]) << '\n';
    return out.str();
}

EdgeColoring from_coloring_file(const Graph& host, const std::string& text) {
    std::istringstream in(text);
    std::string word;
    int ncolors = 0;
    if (!(in >> word >> ncolors) || word != "colors" || ncolors != 2)
        throw InputError("coloring file: expected header 'colors 2'");
    const auto host_edges = host.edges();
    std::vector<Color> colors(host_edges.size(), Color::Red);
    std::vector<char> seen(host_edges.size(), 0);
    int u, v;
    std::string cc;
    size_t lines = 0;
    while (in >> u >> v >> cc) {
        ++lines;
        if (cc.size() != 1)
            throw InputError("coloring file: bad color token '" + cc + "'");
        if (u >= v)
            throw InputError("coloring file: edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ") not normalized");
        auto it = std::lower_bound(host_edges.begin(), host_edges.end(), Edge{u, v});
        if (it == host_edges.end() || *it != Edge{u, v})
            throw InputError("coloring file: (" + std::to_string(u) + "," + std::to_string(v) +
                             ") is not an edge of the host graph");
        size_t idx = static_cast<size_t>(it - host_edges.begin());
        if (seen[idx])
            throw InputError("coloring file: duplicate edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
        seen[idx] = 1;
        colors[idx] = parse_color_char(cc[0]);
    }
    if (!in.eof())
        throw InputError("coloring file: malformed line after " + std::to_string(lines) +
                         " edges");
    if (lines != host_edges.size())
        throw InputError("coloring file: " + std::to_string(lines) + " edges listed, host has " +
                         std::to_string(host_edges.size()));
    return EdgeColoring(host, std::move(colors));
}

AvoidanceSpec AvoidanceSpec::red_and_single_blue(int n, int k) {
    if (n < 3)
        throw InputError("forbidden red cycle length must be at least 3");
    if (k < 3 || k % 2 == 0)
        throw InputError("single forbidden blue length must be odd and at least 3");
    return AvoidanceSpec{n, false, k};
}

AvoidanceSpec AvoidanceSpec::red_and_all_blue_odd(int n) {
    if (n < 3)
        throw InputError("forbidden red cycle length must be at least 3");
    return AvoidanceSpec{n, true, 0};
}

std::optional<ExtremalColoring> color_extremal_lower_bound(const Graph& g, int n) {
    if (g.vertex_count() != 2 * n - 1)
        throw InputError("extremal lower-bound coloring expects exactly 2n-1 = " +
                         std::to_string(2 * n - 1) + " vertices, got " +
                         std::to_string(g.vertex_count()));
    int pivot = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) <= n) {
            pivot = v;
            break;
        }
    }
    if (pivot < 0)
        return std::nullopt;

    // V' gets all but at most one neighbor of the pivot: least neighbor ids
    // first, padded with least non-neighbors. |V'| = n-1, pivot stays in V''.
    VertexSet side(g.vertex_count());
    int room = n - 1;
    std::vector<int> nbrs = g.neighbors(pivot);
    for (int u : nbrs) {
        if (room == 0)
            break;
        side.insert(u);
        --room;
    }
    for (int u = 0; u < g.vertex_count() && room > 0; ++u) {
        if (u == pivot || side.contains(u) || g.adjacent(pivot, u))
            continue;
        side.insert(u);
        --room;
    }
    if (room != 0)
        throw std::logic_error("internal error: could not fill V' to n-1 vertices");

    EdgeColoring coloring = EdgeColoring::paint(g, [&](int u, int v) {
        return side.contains(u) != side.contains(v) ? Color::Blue : Color::Red;
    });
    // What blocks a red C_n through the pivot: at most one of its neighbors
    // escaped V'.
    int red_at_pivot = 0;
    for (int u : nbrs)
        if (!side.contains(u))
            ++red_at_pivot;
    if (red_at_pivot > 1)
        throw std::logic_error("internal error: pivot kept more than one red edge");
    return ExtremalColoring{std::move(coloring), pivot, std::move(side)};
}

BlockingColoring color_bipartite_blocking(int n, int k) {
    if (n < 3)
        throw InputError("blocking coloring needs n >= 3");
    if (k % 2 == 0 || k < 3 || k > n)
        throw InputError("blocking coloring needs odd k with 3 <= k <= n");
    Graph g = complete_graph(2 * n - 2);
    const int half = n - 1;
    EdgeColoring coloring = EdgeColoring::paint(g, [&](int u, int v) {
        return (u < half) != (v < half) ? Color::Blue : Color::Red;
    });
    return BlockingColoring{std::move(g), std::move(coloring)};
}

CycleSearchResult monochromatic_cycle(const Graph& g, const EdgeColoring& coloring, Color c,
                                      int length, SearchLimits limits) {
    if (!coloring.matches(g))
        throw InputError("coloring does not match the host graph");
    Graph sub = coloring.subgraph(c);
    CycleSearchResult r = find_cycle_of_length(sub, length, limits);
    if (r.witness) {
        // Re-verify in the claimed color against the host, not just the subgraph.
        const auto& vs = r.witness->vertices;
        for (size_t i = 0; i < vs.size(); ++i) {
            int u = vs[i], v = vs[(i + 1) % vs.size()];
            if (!g.adjacent(u, v) || coloring.at(u, v) != c)
                throw std::logic_error("internal error: witness edge lost its color");
        }
    }
    return r;
}

AvoidanceVerdict verify_avoidance(const Graph& g, const EdgeColoring& coloring,
                                  const AvoidanceSpec& spec, SearchLimits limits) {
    if (!coloring.matches(g))
        throw InputError("coloring does not match the host graph");
    AvoidanceVerdict verdict;

    CycleSearchResult red = monochromatic_cycle(g, coloring, Color::Red, spec.red_cycle_length,
                                                limits);
    if (red.status == SearchStatus::Unknown)
        throw BudgetExhausted("red C_" + std::to_string(spec.red_cycle_length) +
                              " search ran out of budget");
    if (red.status == SearchStatus::Found) {
        verdict.clean = false;
        verdict.violation = {Color::Red, *red.witness};
        return verdict;
    }

    if (spec.blue_all_odd) {
        Graph blue = coloring.subgraph(Color::Blue);
        for (const auto& comp : components_bipartiteness(blue)) {
            if (!comp.bipartite) {
                verdict.clean = false;
                verdict.violation = {Color::Blue, *comp.odd_cycle};
                return verdict;
            }
        }
    } else {
        CycleSearchResult blue = monochromatic_cycle(g, coloring, Color::Blue,
                                                     spec.blue_cycle_length, limits);
        if (blue.status == SearchStatus::Unknown)
            throw BudgetExhausted("blue C_" + std::to_string(spec.blue_cycle_length) +
                                  " search ran out of budget");
        if (blue.status == SearchStatus::Found) {
            verdict.clean = false;
            verdict.violation = {Color::Blue, *blue.witness};
            return verdict;
        }
    }
    return verdict;
}

} // namespace cyclefit
