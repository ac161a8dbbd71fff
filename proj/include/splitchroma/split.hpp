#pragma once

#include <optional>
#include <vector>

#include "splitchroma/graph.hpp"

namespace splitchroma {

// Clique / independent-set bipartition of a split graph. The clique is
// always maximal: no independent vertex is adjacent to all of it.
struct SplitPartition {
    std::vector<int> clique;      // sorted
    std::vector<int> independent; // sorted
};

// Degree-sequence recognition. Returns the partition with a maximal clique,
// or nullopt when g is not split. Empty and single-vertex graphs are split.
std::optional<SplitPartition> recognize_split(const Graph& g);

// Result of iterated pendant (degree-1) vertex removal.
struct PendantKernel {
    Graph kernel;                              // relabelled to dense ids
    std::vector<std::pair<int, int>> removed_edges; // (pendant, anchor), original ids, removal order
    std::vector<int> to_original;              // kernel id -> original id
    std::vector<int> from_original;            // original id -> kernel id, -1 if removed
};

PendantKernel remove_pendants(const Graph& g);

// |E| > maxdeg * floor(n/2)
bool is_overfull(const Graph& g);

// Some max-degree vertex whose closed neighborhood induces an overfull graph.
bool is_neighborhood_overfull(const Graph& g);

// For graphs with a universal vertex the subgraph-overfull test collapses to
// the plain overfull test: any subgraph of the same maximum degree must span
// all vertices, so the graph itself maximizes the edge count.
// Throws InputError when there is no universal vertex.
bool is_subgraph_overfull_universal(const Graph& g);

} // namespace splitchroma
