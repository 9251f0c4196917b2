#include "cyclefit/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace cyclefit {

namespace {

constexpr int kG6Offset = 63;

void append_size(std::string& out, long long n) {
    if (n < 0)
        throw InputError("graph6: negative size");
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
        out.push_back(static_cast<char>((n & 63) + kG6Offset));
    } else if (n <= 68719476735LL) {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Offset));
    } else {
        throw InputError("graph6: vertex count too large");
    }
}

long long parse_size(const std::string& s, size_t& pos) {
    auto byte = [&](size_t i) -> long long {
        if (i >= s.size())
            throw InputError("graph6: truncated size header");
        int c = static_cast<unsigned char>(s[i]);
        if (c < kG6Offset || c > 126)
            throw InputError("graph6: invalid byte in size header");
        return c - kG6Offset;
    };
    if (byte(pos) != 63) {
        return byte(pos++);
    }
    ++pos;
    if (byte(pos) != 63) {
        long long n = 0;
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | byte(pos++);
        return n;
    }
    ++pos;
    long long n = 0;
    for (int i = 0; i < 6; ++i)
        n = (n << 6) | byte(pos++);
    return n;
}

} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    append_size(out, n);
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Offset));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Offset));
    return out;
}

Graph from_graph6(const std::string& line_in) {
    std::string line = line_in;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.pop_back();
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0)
        line = line.substr(header.size());
    if (line.empty())
        throw InputError("graph6: empty input");

    size_t pos = 0;
    long long n = parse_size(line, pos);
    if (n > 1000000)
        throw InputError("graph6: vertex count too large for this tool");
    const long long nbits = n * (n - 1) / 2;
    const long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(line.size()) - static_cast<long long>(pos) != nbytes)
        throw InputError("graph6: body length mismatch (expected " + std::to_string(nbytes) +
                         " bytes, got " + std::to_string(line.size() - pos) + ")");

    GraphBuilder b(static_cast<int>(n));
    long long bit = 0;
    for (long long i = 0; i < nbytes; ++i) {
        int c = static_cast<unsigned char>(line[pos + static_cast<size_t>(i)]);
        if (c < kG6Offset || c > 126)
            throw InputError("graph6: invalid body byte");
        int val = c - kG6Offset;
        for (int k = 5; k >= 0; --k, ++bit) {
            int on = (val >> k) & 1;
            if (bit >= nbits) {
                if (on)
                    throw InputError("graph6: nonzero padding bits");
                continue;
            }
            if (on) {
                // bit index -> column-major upper-triangle pair
                long long t = bit;
                int v = 1;
                while (t >= v) {
                    t -= v;
                    ++v;
                }
                b.add_edge(static_cast<int>(t), v);
            }
        }
    }
    return b.freeze();
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m))
        throw InputError("edge list: missing 'n m' header");
    if (n < 0 || m < 0 || n > 1000000)
        throw InputError("edge list: invalid header values");
    GraphBuilder b(static_cast<int>(n));
    Edge prev{-1, -1};
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw InputError("edge list: expected " + std::to_string(m) + " edges, found " +
                             std::to_string(i));
        if (u >= v)
            throw InputError("edge list: edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") not normalized (expect u < v)");
        Edge cur{u, v};
        if (!(prev < cur))
            throw InputError("edge list: edges not sorted ascending at line " +
                             std::to_string(i + 2));
        b.add_edge(u, v);
        prev = cur;
    }
    std::string trailing;
    if (in >> trailing)
        throw InputError("edge list: trailing content after " + std::to_string(m) + " edges");
    return b.freeze();
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InputError("cannot open file for writing: " + path);
    f << content;
    if (!f)
        throw InputError("write failed: " + path);
}

namespace {
bool wants_g6(const std::string& path, const std::string& format) {
    if (format == "g6")
        return true;
    if (format == "edges")
        return false;
    if (format != "auto")
        throw InputError("unknown graph format '" + format + "' (use g6, edges or auto)");
    return path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0;
}
} // namespace

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_text_file(path);
    return wants_g6(path, format) ? from_graph6(text) : from_edge_list(text);
}

void save_graph(const Graph& g, const std::string& path, const std::string& format) {
    if (wants_g6(path, format))
        write_text_file(path, to_graph6(g) + "\n");
    else
        write_text_file(path, to_edge_list(g));
}

} // namespace cyclefit
