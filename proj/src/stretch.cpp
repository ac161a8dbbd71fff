#include "splitchroma/stretch.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "splitchroma/check.hpp"

namespace splitchroma {

StretchClass stretch_index_split(const Graph& g, const SplitPartition& p) {
    require(g.vertex_count() >= 2, "stretch classification needs >= 2 vertices");
    require(is_connected(g), "stretch index is defined for connected graphs");
    if (strict_checks_enabled()) {
        ensure(static_cast<int>(p.clique.size() + p.independent.size()) ==
                   g.vertex_count(),
               "partition does not cover the graph");
    }

    if (is_tree(g)) return {1, std::nullopt};

    PendantKernel pk = remove_pendants(g);
    if (auto u = universal_vertex(pk.kernel))
        return {2, pk.to_original[*u]};
    return {3, std::nullopt};
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Max distance in the tree between endpoints of g-edges, abandoning the tree
// as soon as it cannot beat `best`.
int tree_stretch(const Graph& g, const std::vector<Edge>& tree_edges, int best) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> tadj(n);
    for (const Edge& e : tree_edges) {
        tadj[e.first].push_back(e.second);
        tadj[e.second].push_back(e.first);
    }
    std::vector<int> dist(n);
    int stretch = 1;
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        std::queue<int> q;
        q.push(src);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : tadj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (int v : g.neighbors(src)) {
            stretch = std::max(stretch, dist[v]);
            if (stretch >= best) return stretch;
        }
    }
    return stretch;
}

// Enumerates every spanning tree once via include/exclude recursion with a
// connectivity prune on the exclude branch.
class TreeEnumerator {
public:
    TreeEnumerator(const Graph& g) : g_(g), edges_(g.edges()) {}

    int min_stretch() {
        if (is_tree(g_)) return 1;
        best_ = g_.vertex_count(); // trivial upper bound
        std::vector<Edge> chosen;
        recurse(0, chosen, Dsu(g_.vertex_count()));
        return best_;
    }

private:
    void recurse(size_t idx, std::vector<Edge>& chosen, Dsu dsu) {
        if (best_ == 2) return; // cannot improve: 1 means tree, handled above
        if (static_cast<int>(chosen.size()) == g_.vertex_count() - 1) {
            best_ = std::min(best_, tree_stretch(g_, chosen, best_));
            return;
        }
        if (idx == edges_.size()) return;

        const Edge& e = edges_[idx];
        if (dsu.find(e.first) != dsu.find(e.second)) {
            Dsu next = dsu;
            next.unite(e.first, e.second);
            chosen.push_back(e);
            recurse(idx + 1, chosen, next);
            chosen.pop_back();
        }
        if (spannable_without(idx, chosen, dsu)) recurse(idx + 1, chosen, dsu);
    }

    bool spannable_without(size_t idx, const std::vector<Edge>& chosen, Dsu dsu) {
        int components = 0;
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (dsu.find(v) == v) ++components;
        for (size_t i = idx + 1; i < edges_.size() && components > 1; ++i)
            if (dsu.unite(edges_[i].first, edges_[i].second)) --components;
        return components == 1;
    }

    const Graph& g_;
    std::vector<Edge> edges_;
    int best_ = 0;
};

} // namespace

int stretch_index_oracle(const Graph& g, int max_n) {
    require(g.vertex_count() >= 1, "empty graph has no stretch index");
    require(g.vertex_count() <= max_n,
            "graph exceeds the oracle size limit of " + std::to_string(max_n));
    require(is_connected(g), "stretch index is defined for connected graphs");
    if (g.vertex_count() == 1) return 1;
    return TreeEnumerator(g).min_stretch();
}

} // namespace splitchroma
