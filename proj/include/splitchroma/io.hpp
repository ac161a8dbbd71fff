#pragma once

#include <iosfwd>
#include <string>

#include "splitchroma/coloring.hpp"
#include "splitchroma/graph.hpp"

namespace splitchroma {

// Text edge-list format: a header line "n m" followed by m lines "u v" with
// 0-based ids. Lines starting with '#' are comments and may appear anywhere.
// Parse errors carry 1-based line numbers.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);

// Canonical rendering: header, then edges sorted lexicographically.
std::string render_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

// Coloring files: {"palette": k, "edges": [{"u":..,"v":..,"color":..}, ...]}
// with edges sorted lexicographically.
std::string render_coloring(const EdgeColoring& c);
EdgeColoring parse_coloring(std::istream& in);
EdgeColoring parse_coloring_file(const std::string& path);
void write_coloring_file(const EdgeColoring& c, const std::string& path);

} // namespace splitchroma
