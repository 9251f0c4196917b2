#include "cyclefit/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace cyclefit {

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members)
        s.insert(v);
    return s;
}

VertexSet VertexSet::from_indices(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members)
        s.insert(v);
    return s;
}

VertexSet VertexSet::full(int universe) {
    return range(universe, 0, universe);
}

VertexSet VertexSet::range(int universe, int lo, int hi) {
    VertexSet s(universe);
    for (int v = lo; v < hi; ++v)
        s.insert(v);
    return s;
}

void VertexSet::insert(int v) {
    if (v < 0 || v >= universe_)
        throw InputError("VertexSet: vertex " + std::to_string(v) + " outside universe of size " +
                         std::to_string(universe_));
    bits_[v >> 6] |= 1ULL << (v & 63);
}

void VertexSet::erase(int v) {
    if (v < 0 || v >= universe_)
        throw InputError("VertexSet: vertex " + std::to_string(v) + " outside universe of size " +
                         std::to_string(universe_));
    bits_[v >> 6] &= ~(1ULL << (v & 63));
}

int VertexSet::count() const {
    int c = 0;
    for (uint64_t w : bits_)
        c += std::popcount(w);
    return c;
}

std::vector<int> VertexSet::to_indices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (size_t wi = 0; wi < bits_.size(); ++wi) {
        uint64_t w = bits_[wi];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<int>(wi * 64 + b));
            w &= w - 1;
        }
    }
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
    size_t m = std::min(bits_.size(), other.bits_.size());
    for (size_t i = 0; i < m; ++i)
        if (bits_[i] & other.bits_[i])
            return true;
    return false;
}

VertexSet VertexSet::set_minus(const VertexSet& other) const {
    VertexSet out = *this;
    size_t m = std::min(bits_.size(), other.bits_.size());
    for (size_t i = 0; i < m; ++i)
        out.bits_[i] &= ~other.bits_[i];
    return out;
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw InputError("VertexSet: universe mismatch in union");
    VertexSet out = *this;
    for (size_t i = 0; i < bits_.size(); ++i)
        out.bits_[i] |= other.bits_[i];
    return out;
}

VertexSet VertexSet::set_intersect(const VertexSet& other) const {
    VertexSet out = *this;
    size_t m = std::min(bits_.size(), other.bits_.size());
    for (size_t i = 0; i < m; ++i)
        out.bits_[i] &= other.bits_[i];
    for (size_t i = m; i < out.bits_.size(); ++i)
        out.bits_[i] = 0;
    return out;
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) {
    if (vertex_count < 0)
        throw InputError("Graph: negative vertex count");
    GraphBuilder b(vertex_count);
    for (const auto& [u, v] : edges)
        b.add_edge(u, v);
    *this = b.freeze();
}

int Graph::min_degree() const {
    if (n_ == 0)
        return 0;
    return *std::min_element(degree_.begin(), degree_.end());
}

int Graph::max_degree() const {
    if (n_ == 0)
        return 0;
    return *std::max_element(degree_.begin(), degree_.end());
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(degree_[v]));
    auto r = row(v);
    for (size_t wi = 0; wi < r.size(); ++wi) {
        uint64_t w = r[wi];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<int>(wi * 64 + b));
            w &= w - 1;
        }
    }
    return out;
}

VertexSet Graph::neighbor_set(int v) const {
    check_vertex(v);
    VertexSet s(n_);
    auto r = row(v);
    std::copy(r.begin(), r.end(), s.bits_.begin());
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

GraphBuilder::GraphBuilder(int vertex_count)
    : n_(vertex_count),
      words_(detail::words_for(vertex_count)),
      bits_(static_cast<size_t>(vertex_count) * detail::words_for(vertex_count), 0),
      degree_(static_cast<size_t>(vertex_count), 0) {
    if (vertex_count < 0)
        throw InputError("GraphBuilder: negative vertex count");
}

GraphBuilder::GraphBuilder(const Graph& g)
    : n_(g.n_), words_(g.words_), edge_count_(g.edge_count_), bits_(g.bits_), degree_(g.degree_) {}

void GraphBuilder::check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for " + std::to_string(n_) + " vertices");
    if (u == v)
        throw InputError("self-loop at vertex " + std::to_string(u) + " not allowed");
}

void GraphBuilder::add_edge(int u, int v) {
    check_pair(u, v);
    if (adjacent(u, v))
        throw InputError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
    ++degree_[u];
    ++degree_[v];
    ++edge_count_;
}

void GraphBuilder::remove_edge(int u, int v) {
    check_pair(u, v);
    if (!adjacent(u, v))
        throw InputError("removing absent edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ")");
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(1ULL << (v & 63));
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(1ULL << (u & 63));
    --degree_[u];
    --degree_[v];
    --edge_count_;
}

bool GraphBuilder::toggle_would_be_valid(int u, int v) const {
    return u >= 0 && u < n_ && v >= 0 && v < n_ && u != v;
}

Graph GraphBuilder::freeze() const {
    Graph g;
    g.n_ = n_;
    g.words_ = words_;
    g.edge_count_ = edge_count_;
    g.bits_ = bits_;
    g.degree_ = degree_;
    return g;
}

int intersection_count(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    int c = 0;
    size_t m = std::min(a.size(), b.size());
    for (size_t i = 0; i < m; ++i)
        c += std::popcount(a[i] & b[i]);
    return c;
}

int codegree(const Graph& g, int v, int w) {
    g.check_vertex(v);
    g.check_vertex(w);
    if (v == w)
        throw InputError("codegree requires two distinct vertices");
    return intersection_count(g.row(v), g.row(w));
}

long long edge_count_between(const Graph& g, const VertexSet& S, const VertexSet& T) {
    if (S.universe() > g.vertex_count() || T.universe() > g.vertex_count())
        throw InputError("vertex set universe exceeds graph vertex range");
    long long total = 0;
    for (int v : S.to_indices())
        total += intersection_count(g.row(v), T.words());
    return total;
}

long long edges_inside(const Graph& g, const VertexSet& S) {
    return edge_count_between(g, S, S) / 2;
}

bool CycleWitness::verify(const Graph& g) const {
    const int len = length();
    if (len < 3)
        return false;
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count() || seen[static_cast<size_t>(v)])
            return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    for (int i = 0; i < len; ++i) {
        if (!g.adjacent(vertices[static_cast<size_t>(i)],
                        vertices[static_cast<size_t>((i + 1) % len)]))
            return false;
    }
    return true;
}

CycleWitness make_verified_cycle(const Graph& g, std::vector<int> vertices) {
    CycleWitness w{std::move(vertices)};
    if (!w.verify(g))
        throw std::logic_error("internal error: constructed cycle failed re-verification");
    return w;
}

} // namespace cyclefit
