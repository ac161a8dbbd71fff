#pragma once

#include <cstdint>
#include <vector>

#include "splitchroma/coloring.hpp"
#include "splitchroma/graph.hpp"
#include "splitchroma/split.hpp"

namespace splitchroma {

// Deterministic 64-bit generator with portable bounded sampling, so seeded
// fixtures are byte-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        // xorshift* variant
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }

    // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
    int uniform(int lo, int hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(double p) { return next() % 1000000 < static_cast<std::uint64_t>(p * 1000000); }

private:
    std::uint64_t state_;
};

struct ChromaticIndexResult {
    int chi = 0;
    EdgeColoring witness;
};

// Exact chromatic index by canonical backtracking over edges, trying palette
// maxdeg first and maxdeg+1 otherwise. Rejects graphs with more than
// max_edges edges.
ChromaticIndexResult chromatic_index_bruteforce(const Graph& g, int max_edges = 24);

enum class FamilyFilter { Any, EvenDelta, Sigma3, Theorem9 };

struct GenParams {
    int clique_min = 4, clique_max = 8;
    int independent_min = 1, independent_max = 4;
    int sdeg_min = 2, sdeg_max = 4;
    std::uint64_t seed = 1;
    FamilyFilter filter = FamilyFilter::Any;
    int max_retries = 2000;
};

struct GeneratedSplitGraph {
    Graph graph;
    SplitPartition partition;
};

// Builds a clique, attaches each independent vertex to a random clique
// subset, and rejection-samples until the filter holds. Deterministic per
// seed. Throws InputError when the filter is unsatisfiable within retries.
GeneratedSplitGraph random_split_graph(const GenParams& params);

} // namespace splitchroma
