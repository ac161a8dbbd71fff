#pragma once

#include <optional>

#include "splitchroma/graph.hpp"
#include "splitchroma/split.hpp"

namespace splitchroma {

// Stretch classification of a connected split graph: 1 for trees, 2 when the
// pendant kernel has a universal vertex, 3 otherwise.
struct StretchClass {
    int sigma = 0;
    // Universal vertex of the kernel (original ids) when sigma == 2.
    std::optional<int> universal_witness;
};

// Throws InputError on disconnected input or fewer than 2 vertices.
StretchClass stretch_index_split(const Graph& g, const SplitPartition& p);

// Exact stretch index by exhausting spanning trees: the minimum over trees of
// the greatest tree-distance between adjacent vertices of g. Intended for
// cross-checks; rejects graphs larger than max_n.
int stretch_index_oracle(const Graph& g, int max_n = 10);

} // namespace splitchroma
