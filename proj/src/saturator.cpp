#include "splitchroma/saturator.hpp"

#include <algorithm>

#include "splitchroma/check.hpp"

namespace splitchroma {

std::optional<Anchor> select_anchor(const Graph& g, const SplitPartition& p) {
    int n = g.vertex_count();
    int delta = g.max_degree();
    if (delta == 0 || delta % 2 != 0) return std::nullopt;

    std::set<int> independent(p.independent.begin(), p.independent.end());
    std::optional<Anchor> loose;
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != delta) continue;
        for (int s : g.neighbors(u)) {
            if (!independent.count(s)) continue;
            if (2 * g.degree(s) > n - 1) continue;
            if (2 * g.degree(s) <= delta) return Anchor{u, s, true};
            if (!loose) loose = Anchor{u, s, false};
        }
    }
    return loose;
}

InducedSubgraph induce_H(const Graph& g, const Anchor& anchor) {
    require(anchor.delta_vertex >= 0 && anchor.s1 >= 0, "invalid anchor");
    int delta = g.max_degree();
    std::vector<int> verts(g.neighbors(anchor.delta_vertex).begin(),
                           g.neighbors(anchor.delta_vertex).end());
    verts.push_back(anchor.delta_vertex);

    InducedSubgraph sub = induced_subgraph(g, verts);
    ensure(sub.graph.vertex_count() == delta + 1, "core must have maxdeg+1 vertices");
    ensure(sub.graph.max_degree() == delta, "core must preserve maxdeg");
    ensure(universal_vertex(sub.graph).has_value(), "core must have a universal vertex");
    return sub;
}

SaturationRecord build_saturated(const Graph& h, int s1) {
    int n = h.vertex_count();
    require(s1 >= 0 && s1 < n, "s1 out of range");
    require(universal_vertex(h).has_value(), "universal vertex required");
    require(n % 2 == 1, "odd order required");
    int delta = n - 1;
    require(delta >= 2 && delta % 2 == 0, "even maxdeg n-1 required");
    require(h.max_degree() == delta, "maxdeg must be n-1");
    require(!is_overfull(h), "overfull input cannot be saturated within maxdeg");
    require(2 * h.degree(s1) <= delta, "deg(s1) must be at most maxdeg/2");

    SaturationRecord rec;
    rec.h = h;
    rec.h_star = h;
    rec.s1 = s1;

    // Complete everything but s1 into a clique.
    for (int u = 0; u < n; ++u) {
        if (u == s1) continue;
        for (int v = u + 1; v < n; ++v) {
            if (v == s1) continue;
            if (rec.h_star.add_edge(u, v)) rec.added_edges.push_back(edge_key(u, v));
        }
    }

    // Top s1 up until the saturation count is reached.
    long target = static_cast<long>(delta) * (n / 2);
    for (int v = 0; v < n && rec.h_star.edge_count() < target; ++v) {
        if (v == s1 || rec.h_star.has_edge(s1, v)) continue;
        rec.h_star.add_edge(s1, v);
        rec.added_edges.push_back(edge_key(s1, v));
    }

    ensure(rec.h_star.edge_count() == target, "saturation edge count missed");
    ensure(2 * rec.h_star.degree(s1) == delta, "saturated s1 degree must be maxdeg/2");
    int deficit = 0;
    for (int v = 0; v < n; ++v) {
        if (v == s1) continue;
        int d = rec.h_star.degree(v);
        ensure(d == delta || d == delta - 1, "clique degrees must be maxdeg or maxdeg-1");
        if (d == delta - 1) ++deficit;
    }
    ensure(2 * deficit == delta, "exactly maxdeg/2 deficit vertices expected");

    for (const Edge& e : rec.added_edges) {
        rec.pairing_pool[e.first].push_back(e);
        rec.pairing_pool[e.second].push_back(e);
    }
    return rec;
}

EdgeColoring plantholt_color(const SaturationRecord& rec) {
    const Graph& hs = rec.h_star;
    int n = hs.vertex_count();
    int delta = n - 1;
    int m = delta - 1; // odd number of rounds on the clique circle

    // Circle layout: s1's neighbors take positions 0..delta/2-1, the others
    // fill the remaining positions with the largest one as hub.
    std::vector<int> nbrs, rest;
    for (int v = 0; v < n; ++v) {
        if (v == rec.s1) continue;
        (hs.has_edge(rec.s1, v) ? nbrs : rest).push_back(v);
    }
    ensure(static_cast<int>(nbrs.size()) == delta / 2, "apex degree mismatch");

    std::vector<int> pos(n, -1);
    std::vector<int> at(delta, -1);
    int next = 0;
    for (int v : nbrs) pos[v] = next++;
    for (int v : rest) pos[v] = next++;
    for (int v = 0; v < n; ++v)
        if (pos[v] >= 0) at[pos[v]] = v;

    long inv2 = (m + 1) / 2;
    auto circle = [&](int p, int q) {
        if (p > q) std::swap(p, q);
        int c = (q == delta - 1) ? p % m : static_cast<int>(((p + q) * inv2) % m);
        return c == 0 ? m : c;
    };

    EdgeColoring col;
    col.palette_size = delta;
    for (int u = 0; u < n; ++u) {
        if (u == rec.s1) continue;
        for (int v : hs.neighbors(u))
            if (u < v && v != rec.s1) col.set(u, v, circle(pos[u], pos[v]));
    }

    // The first apex edge takes the final color; each remaining apex edge
    // trades colors with one matching edge on the circle. Pairing position i
    // with position delta/2+i-1 keeps the freed colors pairwise distinct.
    col.set(rec.s1, nbrs[0], delta);
    for (int i = 1; i < static_cast<int>(nbrs.size()); ++i) {
        int a = at[i];
        int b = at[delta / 2 + i - 1];
        int freed = circle(i, delta / 2 + i - 1);
        ensure(*col.color_of(a, b) == freed, "matching edge color mismatch");
        col.set(a, b, delta);
        col.set(rec.s1, nbrs[i], freed);
    }

    ensure(verify_proper(hs, col).empty(), "saturated coloring is not proper");
    check_deficit_missing_colors(rec, col);
    return col;
}

void check_deficit_missing_colors(const SaturationRecord& rec,
                                  const EdgeColoring& coloring) {
    const Graph& hs = rec.h_star;
    int delta = hs.vertex_count() - 1;
    MissingColorLists lists = missing_colors(hs, coloring, delta);

    std::set<int> deficit_missing;
    int deficit_count = 0;
    for (int v = 0; v < hs.vertex_count(); ++v) {
        if (v == rec.s1 || hs.degree(v) != delta - 1) continue;
        ++deficit_count;
        ensure(lists.lists[v].size() == 1, "deficit vertex must miss exactly one color");
        ensure(deficit_missing.insert(*lists.lists[v].begin()).second,
               "deficit vertices must miss pairwise distinct colors");
    }
    ensure(2 * deficit_count == delta, "unexpected number of deficit vertices");

    for (int c : lists.lists[rec.s1])
        ensure(!deficit_missing.count(c),
               "apex missing colors must avoid the deficit vertices' colors");
}

} // namespace splitchroma
