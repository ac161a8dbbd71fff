#pragma once

#include <vector>

#include "splitchroma/graph.hpp"
#include "splitchroma/oracle.hpp"
#include "splitchroma/split.hpp"

namespace splitchroma::testfix {

inline Graph make_complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph make_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph make_cycle(int n) {
    Graph g = make_path(n);
    g.add_edge(0, n - 1);
    return g;
}

inline Graph make_star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

// Two adjacent centers 0 and 1 with `a` and `b` leaves.
inline Graph make_bistar(int a, int b) {
    Graph g(2 + a + b);
    g.add_edge(0, 1);
    int next = 2;
    for (int i = 0; i < a; ++i) g.add_edge(0, next++);
    for (int i = 0; i < b; ++i) g.add_edge(1, next++);
    return g;
}

// Clique {0,1,2,3}; vertex 4 adjacent to {0,1}; vertex 5 adjacent to {2,3}.
inline Graph make_g6() {
    Graph g(6);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
    g.add_edge(4, 0);
    g.add_edge(4, 1);
    g.add_edge(5, 2);
    g.add_edge(5, 3);
    return g;
}

// Clique {0..4}; 5 ~ {0,1}; 6 ~ {1,2}; 7 ~ {3,4}. Maxdeg 6 at vertex 1.
inline Graph make_g8() {
    Graph g(8);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) g.add_edge(i, j);
    g.add_edge(5, 0);
    g.add_edge(5, 1);
    g.add_edge(6, 1);
    g.add_edge(6, 2);
    g.add_edge(7, 3);
    g.add_edge(7, 4);
    return g;
}

// Hub 0 plus the 4-cycle 1-2-3-4.
inline Graph make_wheel5() {
    Graph g(5);
    for (int i = 1; i <= 4; ++i) g.add_edge(0, i);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 1);
    return g;
}

inline Graph random_graph(Rng& rng, int n, int permille) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform(0, 999) < permille) g.add_edge(i, j);
    return g;
}

// Exhaustive bipartition check, usable up to ~12 vertices.
inline bool brute_force_is_split(const Graph& g) {
    int n = g.vertex_count();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                bool both_clique = (mask >> i & 1) && (mask >> j & 1);
                bool both_ind = !(mask >> i & 1) && !(mask >> j & 1);
                if (both_clique && !g.has_edge(i, j)) ok = false;
                if (both_ind && g.has_edge(i, j)) ok = false;
            }
        if (ok) return true;
    }
    return n == 0;
}

// Enumerates vertex subsets; induced subgraphs suffice for the
// subgraph-overfull test because adding edges back only helps.
inline bool brute_force_subgraph_overfull(const Graph& g) {
    int n = g.vertex_count();
    int delta = g.max_degree();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> verts;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) verts.push_back(i);
        Graph h = induced_subgraph(g, verts).graph;
        if (h.max_degree() == delta && is_overfull(h)) return true;
    }
    return false;
}

} // namespace splitchroma::testfix
