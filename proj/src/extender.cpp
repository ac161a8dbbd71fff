#include "splitchroma/extender.hpp"

#include <algorithm>

#include "splitchroma/check.hpp"

namespace splitchroma {

HostSaturation to_host_space(const InducedSubgraph& core,
                             const SaturationRecord& rec) {
    HostSaturation out;
    out.delta = rec.h_star.vertex_count() - 1;
    out.core_vertices = core.to_parent;

    for (int local = 0; local < rec.h_star.vertex_count(); ++local)
        out.core_degree[core.to_parent[local]] = rec.h_star.degree(local);

    for (const Edge& e : rec.added_edges) {
        Edge host = edge_key(core.to_parent[e.first], core.to_parent[e.second]);
        out.added_colors[host] = *rec.base_coloring.color_of(e.first, e.second);
        out.pool[host.first].push_back(host);
        out.pool[host.second].push_back(host);
    }

    out.restricted.palette_size = out.delta;
    for (const Edge& e : rec.h.edges()) {
        Edge host = edge_key(core.to_parent[e.first], core.to_parent[e.second]);
        out.restricted.set(host.first, host.second,
                           *rec.base_coloring.color_of(e.first, e.second));
    }
    return out;
}

namespace {

int count_conflict_pairs(const Graph& g, const EdgeColoring& c, int w) {
    std::map<int, int> mult;
    for (int x : g.neighbors(w)) {
        auto col = c.color_of(w, x);
        if (col) ++mult[*col];
    }
    int pairs = 0;
    for (auto& [col, k] : mult) pairs += k * (k - 1) / 2;
    return pairs;
}

// Palette minus the set of colors present at each vertex; unlike
// missing_colors this tolerates clashes, so it can audit mid-resolution
// states.
std::vector<std::set<int>> recompute_lists(const Graph& g, const EdgeColoring& c,
                                           int palette) {
    std::vector<std::set<int>> lists(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int col = 1; col <= palette; ++col) lists[v].insert(col);
    for (const auto& [e, col] : c.assignment) {
        lists[e.first].erase(col);
        lists[e.second].erase(col);
    }
    return lists;
}

} // namespace

InitialAssignment assign_initial(const Graph& g, const HostSaturation& sat) {
    InitialAssignment out;
    out.coloring = sat.restricted;
    out.lists = missing_colors(g, sat.restricted, sat.delta);
    auto pool = sat.pool; // consumed destructively

    std::vector<bool> in_core(g.vertex_count(), false);
    for (int v : sat.core_vertices) in_core[v] = true;

    auto assign = [&](int w, int x, int color) {
        out.coloring.set(w, x, color);
        out.lists.lists[w].erase(color); // may be absent on a clash
        ensure(out.lists.lists[x].erase(color) == 1,
               "assigned color was not free at the clique endpoint");
    };

    for (int w = 0; w < g.vertex_count(); ++w) {
        if (in_core[w]) continue;
        for (int x : g.neighbors(w)) {
            ensure(in_core[x], "outside vertices must only reach the core");
            auto& px = pool[x];
            if (!px.empty()) {
                // Prefer an added edge whose color is still free at w.
                size_t pick = 0;
                bool found = false;
                for (size_t i = 0; i < px.size(); ++i) {
                    int c = sat.added_colors.at(px[i]);
                    if (out.lists.lists[w].count(c)) {
                        pick = i;
                        found = true;
                        break;
                    }
                }
                if (!found) pick = 0;
                Edge chosen = px[pick];
                px.erase(px.begin() + pick);
                // An added edge can sit in both endpoint pools; consume globally.
                int other = chosen.first == x ? chosen.second : chosen.first;
                auto& po = pool[other];
                po.erase(std::remove(po.begin(), po.end(), chosen), po.end());

                assign(w, x, sat.added_colors.at(chosen));
                out.partner[edge_key(w, x)] = other;
            } else {
                // Pool exhausted: only legal when x sits one short of maxdeg
                // in the saturated graph and at maxdeg in g.
                ensure(g.degree(x) == sat.delta &&
                           sat.core_degree.at(x) == sat.delta - 1,
                       "pairing pool exhausted at a balanced vertex");
                ensure(out.lists.lists[x].size() == 1,
                       "expected exactly one missing color");
                assign(w, x, *out.lists.lists[x].begin());
            }
        }
    }

    for (int w = 0; w < g.vertex_count(); ++w) {
        if (in_core[w] || g.degree(w) == 0) continue;
        int pairs = count_conflict_pairs(g, out.coloring, w);
        if (pairs > 0) out.conflict_pairs[w] = pairs;
    }
    return out;
}

ColorTrail build_color_trail(const Graph& g, int w, const EdgeColoring& coloring,
                             const std::map<Edge, int>& partner) {
    ColorTrail trail;
    trail.w = w;

    std::map<int, std::vector<TrailSlot>> by_color;
    for (int x : g.neighbors(w)) {
        auto col = coloring.color_of(w, x);
        ensure(col.has_value(), "trail requires fully assigned outside edges");
        TrailSlot slot{x, std::nullopt};
        auto it = partner.find(edge_key(w, x));
        if (it != partner.end()) slot.dashed_partner = it->second;
        by_color[*col].push_back(slot);
    }

    std::vector<std::pair<int, int>> group_order; // (color, multiplicity)
    for (auto& [col, slots] : by_color) group_order.emplace_back(col, slots.size());
    std::stable_sort(group_order.begin(), group_order.end(),
                     [](const auto& a, const auto& b) {
                         if (a.second != b.second) return a.second > b.second;
                         return a.first < b.first;
                     });

    for (auto& [col, mult] : group_order) {
        auto slots = by_color[col];
        // Within one color at most one slot lacks a dashed partner; it goes
        // rightmost.
        std::stable_partition(slots.begin(), slots.end(),
                              [](const TrailSlot& s) { return s.dashed_partner.has_value(); });
        int undashed = 0;
        for (const auto& s : slots)
            if (!s.dashed_partner) ++undashed;
        ensure(undashed <= 1, "two undashed edges share a color at one vertex");
        for (const auto& s : slots) trail.slots.push_back(s);
        if (mult > 1) trail.color_groups.push_back(col);
    }
    return trail;
}

SwapRecord color_swap(const Graph& g, const ColorTrail& trail, int slot_index,
                      EdgeColoring& coloring, MissingColorLists& lists) {
    int w = trail.w;
    int xi = trail.slots[slot_index].x;
    int clashing = *coloring.color_of(w, xi);

    // Leftmost earlier slot whose partner misses the clashing color.
    int donor_slot = -1;
    for (int j = 0; j < slot_index; ++j) {
        auto& part = trail.slots[j].dashed_partner;
        if (part && lists.lists[*part].count(clashing)) {
            donor_slot = j;
            break;
        }
    }
    ensure(donor_slot >= 0, "no earlier slot can take the clashing color");

    int xp = *trail.slots[donor_slot].dashed_partner;
    ensure(g.has_edge(xi, xp), "donor edge is not an edge of the graph");
    auto donor_color = coloring.color_of(xi, xp);
    ensure(donor_color.has_value(), "donor edge is uncolored");

    coloring.set(w, xi, *donor_color);
    coloring.set(xi, xp, clashing);
    lists.lists[xp].erase(clashing);
    lists.lists[xp].insert(*donor_color);
    lists.lists[w].erase(*donor_color); // now present at w

    return SwapRecord{w,
                      slot_index + 1,
                      edge_key(w, xi),
                      edge_key(xi, xp),
                      *donor_color,
                      clashing};
}

ResolveStats resolve_conflicts(const Graph& g, const ColorTrail& trail,
                               EdgeColoring& coloring, MissingColorLists& lists,
                               SwapLog* log) {
    ResolveStats stats;
    stats.swaps_per_slot.assign(trail.slots.size(), 0);

    int w = trail.w;
    for (int i = 1; i < static_cast<int>(trail.slots.size()); ++i) {
        while (true) {
            int ci = *coloring.color_of(w, trail.slots[i].x);
            bool clash = false;
            for (int j = 0; j < i && !clash; ++j)
                clash = (*coloring.color_of(w, trail.slots[j].x) == ci);
            if (!clash) break;
            // Position i (1-based i+1) settles within i swaps.
            ensure(stats.swaps_per_slot[i] < i, "slot exceeded its swap budget");
            SwapRecord rec = color_swap(g, trail, i, coloring, lists);
            ++stats.swaps_per_slot[i];
            ++stats.total_swaps;
            if (log) log->push_back(rec);
        }
    }
    return stats;
}

EdgeColoring color_sigma3_split(const Graph& g, const SplitPartition& p,
                                SwapLog* log, std::map<int, ResolveStats>* stats) {
    require(g.min_degree() >= 2, "pendant-free input required");
    int delta = g.max_degree();
    require(delta % 2 == 0, "even maxdeg required");

    auto anchor = select_anchor(g, p);
    require(anchor.has_value() && anchor->strict_bound,
            "graph is outside the colorable family");

    InducedSubgraph core = induce_H(g, *anchor);
    SaturationRecord rec =
        build_saturated(core.graph, core.from_parent[anchor->s1]);
    rec.base_coloring = plantholt_color(rec);

    HostSaturation sat = to_host_space(core, rec);
    InitialAssignment st = assign_initial(g, sat);

    for (auto& [w, pairs] : st.conflict_pairs) {
        ColorTrail trail = build_color_trail(g, w, st.coloring, st.partner);
        ResolveStats rs = resolve_conflicts(g, trail, st.coloring, st.lists, log);
        int dw = g.degree(w);
        ensure(rs.total_swaps <= dw * (dw - 1) / 2, "vertex exceeded its swap budget");
        if (stats) (*stats)[w] = rs;

        if (strict_checks_enabled()) {
            // The incrementally maintained lists must match a recomputation.
            ensure(recompute_lists(g, st.coloring, sat.delta) == st.lists.lists,
                   "missing-color lists drifted");
        }
    }

    ensure(verify_proper(g, st.coloring).empty(),
           "extension did not produce a proper coloring");
    ensure(st.coloring.palette_size == delta, "palette must equal maxdeg");
    return st.coloring;
}

} // namespace splitchroma
