#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "splitchroma/graph.hpp"

namespace splitchroma {

// Edge -> color assignment over a palette 1..palette_size. Partial colorings
// are first-class; properness is checked by verify_proper, not enforced here.
struct EdgeColoring {
    int palette_size = 0;
    std::map<Edge, int> assignment;

    std::optional<int> color_of(int u, int v) const {
        auto it = assignment.find(edge_key(u, v));
        if (it == assignment.end()) return std::nullopt;
        return it->second;
    }
    void set(int u, int v, int c) { assignment[edge_key(u, v)] = c; }
};

enum class ViolationKind { UncoloredEdge, ColorClash, NotAnEdge, ColorOutOfRange };

struct Violation {
    ViolationKind kind;
    int vertex = -1; // clash location, -1 otherwise
    int color = 0;
    std::vector<Edge> edges;
    std::string describe() const;
};

// Empty result means: every edge of g is colored, every color is in range,
// no two edges sharing a vertex share a color, and nothing outside E(g) is
// colored.
std::vector<Violation> verify_proper(const Graph& g, const EdgeColoring& c);

// Per-vertex lists of palette colors not present on incident edges.
struct MissingColorLists {
    int palette_size = 0;
    std::vector<std::set<int>> lists;
};

// Throws InputError when the (possibly partial) coloring clashes at a vertex
// or colors a non-edge.
MissingColorLists missing_colors(const Graph& g, const EdgeColoring& c,
                                 int palette);

// Round-robin coloring of the complete graph on n vertices.
// Palette: n-1 for even n, n for odd n >= 3, 0 for n <= 1.
// For odd n, color class c is the near-perfect matching {ij : i+j = 2c mod n},
// leaving vertex c mod n unmatched; for even n vertex n-1 plays hub over the
// odd schedule on the rest.
EdgeColoring color_complete_graph(int n);

// Maxdeg-coloring of a graph with a universal vertex and even order,
// by restriction of the complete-graph coloring.
EdgeColoring color_universal_even(const Graph& g);

// Constructive coloring with at most maxdeg+1 colors (fan rotations plus
// alternating-path inversions). Edges are processed in BFS order, which keeps
// trees at exactly maxdeg colors.
EdgeColoring fallback_delta_plus_one(const Graph& g);

// Replays pendant edges in reverse removal order, giving each the smallest
// color free at its anchor. Input coloring must be proper on the kernel part;
// result is proper with palette max(partial palette, maxdeg(g)).
EdgeColoring extend_to_pendants(const Graph& g, EdgeColoring partial,
                                const std::vector<std::pair<int, int>>& removed_edges);

} // namespace splitchroma
