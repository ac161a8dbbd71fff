#include "splitchroma/split.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "splitchroma/check.hpp"

namespace splitchroma {

namespace {

bool is_clique(const Graph& g, const std::vector<int>& verts) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) return false;
    return true;
}

bool is_independent(const Graph& g, const std::vector<int>& verts) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) return false;
    return true;
}

bool adjacent_to_all(const Graph& g, int v, const std::vector<int>& set) {
    for (int q : set)
        if (q != v && !g.has_edge(v, q)) return false;
    return true;
}

} // namespace

std::optional<SplitPartition> recognize_split(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return SplitPartition{};

    // Vertices by non-increasing degree, ids break ties.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i) m = i + 1;

    long head = 0, tail = 0;
    for (int i = 0; i < n; ++i) {
        if (i < m)
            head += g.degree(order[i]);
        else
            tail += g.degree(order[i]);
    }
    if (head != static_cast<long>(m) * (m - 1) + tail) return std::nullopt;

    SplitPartition p;
    p.clique.assign(order.begin(), order.begin() + m);
    p.independent.assign(order.begin() + m, order.end());
    std::sort(p.clique.begin(), p.clique.end());
    std::sort(p.independent.begin(), p.independent.end());

    ensure(is_clique(g, p.clique) && is_independent(g, p.independent),
           "degree-sequence split partition failed verification");

    // Promote any independent vertex adjacent to the whole clique.
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = p.independent.begin(); it != p.independent.end(); ++it) {
            if (adjacent_to_all(g, *it, p.clique)) {
                p.clique.insert(
                    std::lower_bound(p.clique.begin(), p.clique.end(), *it), *it);
                p.independent.erase(it);
                changed = true;
                break;
            }
        }
    }
    return p;
}

PendantKernel remove_pendants(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<bool> alive(n, true);
    std::vector<std::set<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        adj[v] = g.neighbors(v);
        deg[v] = g.degree(v);
    }

    PendantKernel out;
    std::set<int> pendants;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) pendants.insert(v);

    while (!pendants.empty()) {
        int p = *pendants.begin();
        pendants.erase(pendants.begin());
        if (!alive[p] || deg[p] != 1) continue;
        int anchor = *adj[p].begin();
        out.removed_edges.emplace_back(p, anchor);
        alive[p] = false;
        adj[anchor].erase(p);
        adj[p].clear();
        deg[p] = 0;
        if (--deg[anchor] == 1) pendants.insert(anchor);
    }

    std::vector<int> kept;
    for (int v = 0; v < n; ++v)
        if (alive[v]) kept.push_back(v);

    out.from_original.assign(n, -1);
    out.to_original = kept;
    for (int i = 0; i < static_cast<int>(kept.size()); ++i)
        out.from_original[kept[i]] = i;
    out.kernel = Graph(static_cast<int>(kept.size()));
    for (int v : kept)
        for (int w : adj[v])
            if (v < w) out.kernel.add_edge(out.from_original[v], out.from_original[w]);
    return out;
}

bool is_overfull(const Graph& g) {
    require(g.vertex_count() >= 1, "overfull test needs a nonempty graph");
    long bound = static_cast<long>(g.max_degree()) * (g.vertex_count() / 2);
    return g.edge_count() > bound;
}

bool is_neighborhood_overfull(const Graph& g) {
    int delta = g.max_degree();
    if (delta == 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != delta) continue;
        std::vector<int> closed(g.neighbors(v).begin(), g.neighbors(v).end());
        closed.push_back(v);
        if (is_overfull(induced_subgraph(g, closed).graph)) return true;
    }
    return false;
}

bool is_subgraph_overfull_universal(const Graph& g) {
    require(universal_vertex(g).has_value(),
            "subgraph-overfull test requires a universal vertex");
    return is_overfull(g);
}

} // namespace splitchroma
