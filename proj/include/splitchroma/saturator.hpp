#pragma once

#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "splitchroma/coloring.hpp"
#include "splitchroma/graph.hpp"
#include "splitchroma/split.hpp"

namespace splitchroma {

// A max-degree vertex together with an independent neighbor of small degree.
// strict_bound holds when 2*deg(s1) <= maxdeg, the condition the saturated
// construction needs; the anchor itself only requires 2*deg(s1) <= n-1.
struct Anchor {
    int delta_vertex = -1;
    int s1 = -1;
    bool strict_bound = false;
};

// Smallest qualifying (delta_vertex, s1) pair, anchors satisfying the strict
// bound preferred. Returns nullopt when maxdeg is odd or no pair qualifies.
std::optional<Anchor> select_anchor(const Graph& g, const SplitPartition& p);

// Subgraph induced by a max-degree vertex and its neighborhood: a core with a
// universal vertex, odd order maxdeg+1, and the same maxdeg.
InducedSubgraph induce_H(const Graph& g, const Anchor& anchor);

struct SaturationRecord {
    Graph h;
    Graph h_star;
    int s1 = -1;
    // E(h_star \ h): clique-completion edges first (lexicographic), then the
    // extra s1 edges, in insertion order.
    std::vector<Edge> added_edges;
    // Per vertex, the added edges incident to it, in insertion order.
    std::map<int, std::deque<Edge>> pairing_pool;
    EdgeColoring base_coloring; // filled by plantholt_color
};

// Completes everything but s1 into a clique, then tops s1 up to half the
// clique so that |E| = maxdeg * floor(n/2) exactly. Extra s1 edges attach to
// the smallest-id non-neighbors. Rejects overfull input and s1 degrees above
// maxdeg/2.
SaturationRecord build_saturated(const Graph& h, int s1);

// Proper coloring of the saturated graph with palette exactly maxdeg:
// round-robin on the big clique with maxdeg-1 colors, then a rainbow matching
// is recolored with the final color to free one distinct color per s1 edge.
EdgeColoring plantholt_color(const SaturationRecord& rec);

// Structural consequence of saturation used downstream: each deficit
// (degree maxdeg-1) vertex misses exactly one color, those colors are
// pairwise distinct, and they are disjoint from s1's missing colors.
// Throws InternalError when a proper maxdeg-coloring of h_star violates it.
void check_deficit_missing_colors(const SaturationRecord& rec,
                                  const EdgeColoring& coloring);

} // namespace splitchroma
