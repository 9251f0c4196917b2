#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cyclefit/errors.hpp"

namespace cyclefit {

using Edge = std::pair<int, int>;

namespace detail {
inline int words_for(int n) { return (n + 63) / 64; }
} // namespace detail

// Subset of the vertex range 0..universe-1, stored as a bitset.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), bits_(detail::words_for(universe), 0) {}

    static VertexSet of(int universe, std::initializer_list<int> members);
    static VertexSet from_indices(int universe, const std::vector<int>& members);
    static VertexSet full(int universe);
    static VertexSet range(int universe, int lo, int hi); // [lo, hi)

    int universe() const { return universe_; }
    bool contains(int v) const {
        return v >= 0 && v < universe_ && (bits_[v >> 6] >> (v & 63)) & 1u;
    }
    void insert(int v);
    void erase(int v);
    int count() const;
    bool empty() const { return count() == 0; }
    std::vector<int> to_indices() const;

    bool intersects(const VertexSet& other) const;
    bool disjoint_with(const VertexSet& other) const { return !intersects(other); }
    VertexSet set_minus(const VertexSet& other) const;
    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_intersect(const VertexSet& other) const;

    std::span<const uint64_t> words() const { return bits_; }

    bool operator==(const VertexSet& other) const = default;

private:
    friend class Graph;
    int universe_ = 0;
    std::vector<uint64_t> bits_;
};

// Immutable simple undirected graph. Adjacency is stored as one bit row per
// vertex; neighborhood intersections are popcounts over rows.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return edge_count_; }
    int words() const { return words_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    int degree(int v) const { return degree_[v]; }
    int min_degree() const;
    int max_degree() const;

    std::span<const uint64_t> row(int v) const {
        return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
    }
    std::vector<int> neighbors(int v) const;
    VertexSet neighbor_set(int v) const;

    // Edges in canonical order: (u,v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw InputError("vertex id " + std::to_string(v) + " out of range [0," +
                             std::to_string(n_) + ")");
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    friend class GraphBuilder;
    int n_ = 0;
    int words_ = 0;
    long long edge_count_ = 0;
    std::vector<uint64_t> bits_;   // n_ rows of words_ 64-bit words
    std::vector<int> degree_;
};

// Mutable adjacency used while assembling or repairing a graph; freeze()
// produces the immutable Graph everything else consumes.
class GraphBuilder {
public:
    explicit GraphBuilder(int vertex_count);
    explicit GraphBuilder(const Graph& g);

    int vertex_count() const { return n_; }
    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    int degree(int v) const { return degree_[v]; }

    void add_edge(int u, int v);    // InputError on loops/range; no-op guard on duplicates
    void remove_edge(int u, int v); // InputError if the edge is absent
    bool toggle_would_be_valid(int u, int v) const;

    Graph freeze() const;

private:
    void check_pair(int u, int v) const;
    int n_ = 0;
    int words_ = 0;
    long long edge_count_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<int> degree_;
};

// |N(v) ∩ N(w)| for distinct vertices.
int codegree(const Graph& g, int v, int w);

// e(S,T) = |{(v,w): v in S, w in T, vw an edge}| with ordered pairs, so edges
// inside S ∩ T contribute twice.
long long edge_count_between(const Graph& g, const VertexSet& S, const VertexSet& T);

// Number of edges with both ends in S.
long long edges_inside(const Graph& g, const VertexSet& S);

int intersection_count(std::span<const uint64_t> a, std::span<const uint64_t> b);

// Explicit cycle: consecutive vertices (cyclically) adjacent, all distinct,
// length >= 3. Every search in the library re-verifies a witness before
// emitting it.
struct CycleWitness {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool verify(const Graph& g) const;
};

// Verifies and returns the witness; throws std::logic_error on an internal
// invariant breach (an unverifiable witness must never escape a builder).
CycleWitness make_verified_cycle(const Graph& g, std::vector<int> vertices);

} // namespace cyclefit
