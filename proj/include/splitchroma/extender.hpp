#pragma once

#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "splitchroma/coloring.hpp"
#include "splitchroma/graph.hpp"
#include "splitchroma/saturator.hpp"
#include "splitchroma/split.hpp"

namespace splitchroma {

// Saturation data translated into the host graph's id space.
struct HostSaturation {
    int delta = 0;
    std::vector<int> core_vertices;            // ascending host ids
    std::map<int, int> core_degree;            // degree within h_star
    std::map<Edge, int> added_colors;          // added edge -> base color
    std::map<int, std::deque<Edge>> pool;      // per vertex, unconsumed added edges
    EdgeColoring restricted;                   // base coloring restricted to core edges
};

HostSaturation to_host_space(const InducedSubgraph& core,
                             const SaturationRecord& rec);

// One edge of an outside vertex in the conflict-resolution order. The
// dashed partner is the far endpoint of the added edge whose color this edge
// inherited, when there is one.
struct TrailSlot {
    int x = -1;
    std::optional<int> dashed_partner;
};

struct ColorTrail {
    int w = -1;
    std::vector<TrailSlot> slots;
    std::vector<int> color_groups; // conflicting colors, busiest first
};

struct SwapRecord {
    int w = -1;
    int slot = 0;          // 1-based trail position
    Edge outside_edge{};   // (w, x_i)
    Edge donor_edge{};     // (x_i, donor vertex)
    int color_taken = 0;   // color moved onto the outside edge
    int color_released = 0;
    // True when the donor came from an earlier slot's partner, the rule the
    // procedure prescribes; false for the widened search (later slots or
    // other core neighbors of x_i), which only engages when every earlier
    // partner either lacks the color or lacks the donor edge.
    bool procedure_rule = true;
};

using SwapLog = std::vector<SwapRecord>;

struct InitialAssignment {
    EdgeColoring coloring;            // all edges of g colored, palette delta
    MissingColorLists lists;
    std::map<Edge, int> partner;      // outside edge -> dashed partner
    std::map<int, int> conflict_pairs; // per outside vertex, clashing pairs
};

// First phase: colors every outside edge wx either with an unconsumed added
// edge at x (preferring a color still free at w) or, when the pool at x is
// exhausted, with x's unique missing color. Clique vertices stay clash-free;
// clashes can appear only at outside vertices.
InitialAssignment assign_initial(const Graph& g, const HostSaturation& sat);

// Orders w's outside edges: clashing color groups first (multiplicity, then
// color id), inside a group the slot without a dashed partner last, then the
// clash-free edges by color id.
ColorTrail build_color_trail(const Graph& g, int w, const EdgeColoring& coloring,
                             const std::map<Edge, int>& partner);

// Exchanges colors between the slot's outside edge and the edge joining its
// clique endpoint to the leftmost earlier partner missing the clashing color.
// When no earlier partner qualifies with a usable donor edge, the search
// widens to later partners and then to other core neighbors of the clique
// endpoint. Throws InternalError when no donor exists at all.
SwapRecord color_swap(const Graph& g, const ColorTrail& trail, int slot_index,
                      EdgeColoring& coloring, MissingColorLists& lists,
                      const std::vector<bool>& in_core);

struct ResolveStats {
    std::vector<int> swaps_per_slot; // aligned with trail slots
    int total_swaps = 0;
    int widened_swaps = 0; // swaps that left the prescribed donor rule
    int chain_repairs = 0; // alternating-path repairs after budget exhaustion
};

// Scans slots left to right, swapping while the slot clashes with an earlier
// one. A slot at 1-based position i gets a budget of i-1 swaps; a clash that
// survives the budget (or finds no donor) is repaired by inverting an
// alternating two-color path, which removes one clash without touching w's
// other edges.
ResolveStats resolve_conflicts(const Graph& g, const ColorTrail& trail,
                               EdgeColoring& coloring, MissingColorLists& lists,
                               const std::vector<bool>& in_core,
                               SwapLog* log = nullptr);

// Full pipeline for a pendant-free split graph of even maxdeg whose stretch
// class is 3: induce the core, saturate, color, extend, resolve. The result
// is proper with palette exactly maxdeg.
EdgeColoring color_sigma3_split(const Graph& g, const SplitPartition& p,
                                SwapLog* log = nullptr,
                                std::map<int, ResolveStats>* stats = nullptr);

} // namespace splitchroma
