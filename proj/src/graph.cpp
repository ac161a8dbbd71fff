#include "splitchroma/graph.hpp"

#include <algorithm>
#include <queue>

#include "splitchroma/check.hpp"

namespace splitchroma {

Graph::Graph(int n) {
    require(n >= 0, "vertex count must be non-negative");
    adj_.resize(n);
}

void Graph::check_vertex(int v) const {
    require(v >= 0 && v < vertex_count(), "vertex id out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return adj_[u].count(v) > 0;
}

bool Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    require(u != v, "self-loops are not allowed");
    if (adj_[u].count(v)) return false;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++m_;
    return true;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (adj_[u].erase(v)) {
        adj_[v].erase(u);
        --m_;
    }
}

const std::set<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = vertex_count();
    for (const auto& nbrs : adj_) d = std::min(d, static_cast<int>(nbrs.size()));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int visited = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = true;
                ++visited;
                q.push(v);
            }
        }
    }
    return visited == n;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 &&
           is_connected(g);
}

std::optional<int> universal_vertex(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) return v;
    return std::nullopt;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    InducedSubgraph out;
    out.to_parent = verts;
    out.from_parent.assign(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        require(verts[i] >= 0 && verts[i] < g.vertex_count(),
                "induced vertex out of range");
        out.from_parent[verts[i]] = i;
    }
    out.graph = Graph(static_cast<int>(verts.size()));
    for (int u : verts)
        for (int v : g.neighbors(u))
            if (u < v && out.from_parent[v] >= 0)
                out.graph.add_edge(out.from_parent[u], out.from_parent[v]);
    return out;
}

} // namespace splitchroma
