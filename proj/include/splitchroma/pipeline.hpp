#pragma once

#include <string>

#include "splitchroma/coloring.hpp"
#include "splitchroma/extender.hpp"
#include "splitchroma/graph.hpp"

namespace splitchroma {

// Classification verdict for a connected split graph. `klass` is the exact
// chromatic-index class of the whole graph ("1", "2" or "unknown"); `reason`
// names the structural fact about the pendant-free kernel that decided it:
//   tree | universal-even | plantholt | chen-odd-delta | almeida-condition |
//   theorem9 | overfull | open-case
struct ClassifyReport {
    int n = 0, m = 0;
    int delta = 0;
    int kernel_delta = 0;
    int sigma = 0;
    bool overfull = false;
    bool neighborhood_overfull = false;
    std::string klass;
    std::string reason;
    // theorem9 kernels where no independent vertex on a max-degree vertex
    // satisfies the stricter bound the constructive route needs.
    bool hypothesis_mismatch = false;

    std::string to_json() const;
};

ClassifyReport classify_graph(const Graph& g);

// Coloring result. route mirrors the classify reasons for the constructive
// paths (tree, universal-even, plantholt, theorem9); otherwise it is
// "fallback" and fallback_cause explains why (overfull, chen-odd-delta,
// almeida-condition, open-case, hypothesis-mismatch, plantholt-inapplicable).
// Constructive routes guarantee palette == maxdeg; fallback guarantees
// palette <= maxdeg+1. The result always verifies proper.
struct ColorOutcome {
    EdgeColoring coloring;
    std::string route;
    std::string fallback_cause;
    int delta = 0;
    SwapLog swap_log;

    std::string report_json() const;
};

ColorOutcome color_graph(const Graph& g, bool want_swap_log = false);

// True when some independent vertex v satisfies
// ceil(|clique|/2) <= deg(v) <= maxdeg/2.
bool almeida_condition(const Graph& g, const SplitPartition& p);

} // namespace splitchroma
