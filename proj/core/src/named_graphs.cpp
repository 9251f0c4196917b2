#include "cyclefit/named_graphs.hpp"

#include <algorithm>

namespace cyclefit {

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.freeze();
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw InputError("cycle_graph needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return b.freeze();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return b.freeze();
}

Graph complete_bipartite(int a, int b) {
    GraphBuilder g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            g.add_edge(u, v);
    return g.freeze();
}

Graph empty_graph(int n) {
    return GraphBuilder(n).freeze();
}

Graph petersen_graph() {
    GraphBuilder b(10);
    for (int v = 0; v < 5; ++v) {
        b.add_edge(v, (v + 1) % 5);     // outer pentagon
        b.add_edge(5 + v, 5 + (v + 2) % 5); // inner pentagram
        b.add_edge(v, 5 + v);           // spokes
    }
    return b.freeze();
}

Graph random_graph(int n, SplitMix64& rng) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin())
                b.add_edge(u, v);
    return b.freeze();
}

Graph random_graph_with_edges(int n, long long m, SplitMix64& rng) {
    const long long all = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > all)
        throw InputError("edge count out of range");
    std::vector<Edge> pairs;
    pairs.reserve(static_cast<size_t>(all));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    // Partial Fisher-Yates: the first m slots become the sample.
    for (long long i = 0; i < m; ++i) {
        long long j = i + static_cast<long long>(rng.next_below(static_cast<uint64_t>(all - i)));
        std::swap(pairs[static_cast<size_t>(i)], pairs[static_cast<size_t>(j)]);
    }
    pairs.resize(static_cast<size_t>(m));
    return Graph(n, pairs);
}

} // namespace cyclefit
