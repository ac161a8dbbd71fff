#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace splitchroma {

// Unordered vertex pair, normalized to first < second.
using Edge = std::pair<int, int>;

inline Edge edge_key(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on dense vertex ids 0..n-1.
// Adjacency is kept as ordered sets so iteration order is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    // Returns false if the edge was already present. Throws on self-loops
    // and out-of-range ids.
    bool add_edge(int u, int v);
    void remove_edge(int u, int v);

    const std::set<int>& neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const; // 0 for an edgeless graph
    int min_degree() const;

    std::vector<Edge> edges() const; // sorted lexicographically

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;

    std::vector<std::set<int>> adj_;
    int m_ = 0;
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Smallest vertex adjacent to all others, if any.
std::optional<int> universal_vertex(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;   // local id -> parent id, ascending
    std::vector<int> from_parent; // parent id -> local id, -1 if absent
};

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> verts);

} // namespace splitchroma
