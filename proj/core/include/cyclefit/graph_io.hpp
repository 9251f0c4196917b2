#pragma once

#include <string>

#include "cyclefit/graph.hpp"

namespace cyclefit {

// graph6 encoding (Brendan McKay's format, as used by nauty): N(n) size header
// followed by the upper triangle in column-major order, packed 6 bits per
// printable byte. Output is bit-exact per the published standard.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line); // accepts an optional >>graph6<< header

// Plain edge list: "n m" header line, then one "u v" line per edge,
// 0-indexed, normalized (u < v) and sorted ascending.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

// File helpers. Format chosen by extension: ".g6" is graph6, anything else is
// an edge list; `format` may be "g6", "edges" or "auto".
Graph load_graph(const std::string& path, const std::string& format = "auto");
void save_graph(const Graph& g, const std::string& path, const std::string& format = "auto");

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace cyclefit
