#include "splitchroma/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "splitchroma/check.hpp"
#include "splitchroma/saturator.hpp"
#include "splitchroma/stretch.hpp"

namespace splitchroma {

namespace {

// Backtracking search for a proper coloring with palette k. Edges are tried
// in order of decreasing endpoint degree sum; colors are canonicalized (an
// edge may open at most one fresh color), which prunes palette symmetries
// without affecting existence.
class EdgeColorSearch {
public:
    EdgeColorSearch(const Graph& g, int k) : g_(g), k_(k), used_(g.vertex_count()) {
        edges_ = g.edges();
        std::stable_sort(edges_.begin(), edges_.end(), [&](const Edge& a, const Edge& b) {
            return g_.degree(a.first) + g_.degree(a.second) >
                   g_.degree(b.first) + g_.degree(b.second);
        });
        colors_.assign(edges_.size(), 0);
    }

    bool run(EdgeColoring& out) {
        if (!search(0, 0)) return false;
        out.palette_size = k_;
        for (size_t i = 0; i < edges_.size(); ++i)
            out.set(edges_[i].first, edges_[i].second, colors_[i]);
        return true;
    }

private:
    bool search(size_t idx, int max_used) {
        if (idx == edges_.size()) return true;
        auto [u, v] = edges_[idx];
        int cap = std::min(k_, max_used + 1);
        for (int c = 1; c <= cap; ++c) {
            if (used_[u].count(c) || used_[v].count(c)) continue;
            used_[u].insert(c);
            used_[v].insert(c);
            colors_[idx] = c;
            if (search(idx + 1, std::max(max_used, c))) return true;
            used_[u].erase(c);
            used_[v].erase(c);
        }
        colors_[idx] = 0;
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<Edge> edges_;
    std::vector<int> colors_;
    std::vector<std::set<int>> used_;
};

} // namespace

ChromaticIndexResult chromatic_index_bruteforce(const Graph& g, int max_edges) {
    require(g.edge_count() <= max_edges,
            "graph exceeds the oracle limit of " + std::to_string(max_edges) +
                " edges");
    ChromaticIndexResult res;
    if (g.edge_count() == 0) return res;

    int delta = g.max_degree();
    for (int k = delta; k <= delta + 1; ++k) {
        EdgeColorSearch search(g, k);
        if (search.run(res.witness)) {
            res.chi = k;
            return res;
        }
    }
    ensure(false, "no coloring within maxdeg+1 colors");
    return res;
}

namespace {

bool filter_holds(const GeneratedSplitGraph& cand, FamilyFilter filter) {
    const Graph& g = cand.graph;
    switch (filter) {
    case FamilyFilter::Any:
        return true;
    case FamilyFilter::EvenDelta:
        return g.max_degree() % 2 == 0;
    case FamilyFilter::Sigma3:
        return g.vertex_count() >= 2 && is_connected(g) && g.min_degree() >= 2 &&
               stretch_index_split(g, cand.partition).sigma == 3;
    case FamilyFilter::Theorem9: {
        if (g.vertex_count() < 2 || !is_connected(g) || g.min_degree() < 2) return false;
        if (g.max_degree() % 2 != 0) return false;
        if (stretch_index_split(g, cand.partition).sigma != 3) return false;
        auto anchor = select_anchor(g, cand.partition);
        return anchor.has_value() && anchor->strict_bound;
    }
    }
    return false;
}

} // namespace

GeneratedSplitGraph random_split_graph(const GenParams& params) {
    Rng rng(params.seed);

    for (int attempt = 0; attempt < params.max_retries; ++attempt) {
        int q = rng.uniform(params.clique_min, params.clique_max);
        int s = rng.uniform(params.independent_min, params.independent_max);
        if (q < 1) q = 1;
        if (s < 0) s = 0;

        Graph g(q + s);
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j) g.add_edge(i, j);

        std::vector<int> clique_ids(q);
        std::iota(clique_ids.begin(), clique_ids.end(), 0);
        for (int i = 0; i < s; ++i) {
            int lo = std::min(params.sdeg_min, q);
            int hi = std::min(params.sdeg_max, q);
            int d = rng.uniform(std::max(lo, 1), std::max(hi, 1));
            // partial shuffle picks d distinct clique vertices
            for (int j = 0; j < d; ++j) {
                int k = rng.uniform(j, q - 1);
                std::swap(clique_ids[j], clique_ids[k]);
            }
            for (int j = 0; j < d; ++j) g.add_edge(q + i, clique_ids[j]);
            std::sort(clique_ids.begin(), clique_ids.end());
        }

        auto part = recognize_split(g);
        ensure(part.has_value(), "generator produced a non-split graph");
        GeneratedSplitGraph cand{std::move(g), std::move(*part)};
        if (filter_holds(cand, params.filter)) return cand;
    }
    throw InputError("family filter unsatisfiable within retry budget");
}

} // namespace splitchroma
