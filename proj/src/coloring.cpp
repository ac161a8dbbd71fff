#include "splitchroma/coloring.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "splitchroma/check.hpp"

namespace splitchroma {

std::string Violation::describe() const {
    std::ostringstream os;
    auto edge_str = [](const Edge& e) {
        return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
    };
    switch (kind) {
    case ViolationKind::UncoloredEdge:
        os << "uncolored edge " << edge_str(edges.front());
        break;
    case ViolationKind::ColorClash:
        os << "color " << color << " repeated at vertex " << vertex << ":";
        for (const auto& e : edges) os << " " << edge_str(e);
        break;
    case ViolationKind::NotAnEdge:
        os << "colored pair " << edge_str(edges.front()) << " is not an edge";
        break;
    case ViolationKind::ColorOutOfRange:
        os << "edge " << edge_str(edges.front()) << " has color " << color
           << " outside 1.." << std::max(color, 0);
        break;
    }
    return os.str();
}

std::vector<Violation> verify_proper(const Graph& g, const EdgeColoring& c) {
    std::vector<Violation> out;

    for (const auto& [e, col] : c.assignment) {
        if (e.first < 0 || e.second >= g.vertex_count() || !g.has_edge(e.first, e.second)) {
            out.push_back({ViolationKind::NotAnEdge, -1, col, {e}});
        } else if (col < 1 || col > c.palette_size) {
            out.push_back({ViolationKind::ColorOutOfRange, -1, col, {e}});
        }
    }
    for (const Edge& e : g.edges()) {
        if (!c.assignment.count(e))
            out.push_back({ViolationKind::UncoloredEdge, -1, 0, {e}});
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::map<int, std::vector<Edge>> by_color;
        for (int w : g.neighbors(v)) {
            auto col = c.color_of(v, w);
            if (col) by_color[*col].push_back(edge_key(v, w));
        }
        for (auto& [col, es] : by_color)
            if (es.size() > 1)
                out.push_back({ViolationKind::ColorClash, v, col, es});
    }
    return out;
}

MissingColorLists missing_colors(const Graph& g, const EdgeColoring& c,
                                 int palette) {
    require(palette >= 0, "palette must be non-negative");
    MissingColorLists out;
    out.palette_size = palette;
    out.lists.assign(g.vertex_count(), {});
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int col = 1; col <= palette; ++col) out.lists[v].insert(col);

    for (const auto& [e, col] : c.assignment) {
        require(g.has_edge(e.first, e.second), "coloring mentions a non-edge");
        require(out.lists[e.first].erase(col) == 1,
                "color clash at vertex " + std::to_string(e.first));
        require(out.lists[e.second].erase(col) == 1,
                "color clash at vertex " + std::to_string(e.second));
    }
    return out;
}

namespace {

// Color of the complete-graph edge between circle positions p and q; the hub
// sits at position n-1, m = n-1 rounds for even n handled by the caller.
int circle_color(int p, int q, int m) {
    // m odd; inv2 = (m+1)/2 inverts 2 mod m
    int c;
    if (q == m) { // hub
        c = p % m;
    } else {
        long inv2 = (m + 1) / 2;
        c = static_cast<int>(((p + q) * inv2) % m);
    }
    return c == 0 ? m : c;
}

} // namespace

EdgeColoring color_complete_graph(int n) {
    require(n >= 0, "order must be non-negative");
    EdgeColoring c;
    if (n <= 1) return c; // no edges, zero palette

    if (n % 2 == 1) {
        c.palette_size = n;
        long inv2 = (n + 1) / 2;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int col = static_cast<int>(((i + j) * inv2) % n);
                c.set(i, j, col == 0 ? n : col);
            }
    } else {
        int m = n - 1; // odd round count, vertex n-1 is the hub
        c.palette_size = m;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                c.set(i, j, circle_color(i, j == n - 1 ? m : j, m));
    }
    return c;
}

EdgeColoring color_universal_even(const Graph& g) {
    int n = g.vertex_count();
    require(n % 2 == 0 && n >= 2, "even order required");
    require(universal_vertex(g).has_value(), "universal vertex required");

    EdgeColoring full = color_complete_graph(n);
    EdgeColoring c;
    c.palette_size = n - 1; // equals maxdeg(g)
    for (const Edge& e : g.edges()) c.set(e.first, e.second, *full.color_of(e.first, e.second));
    return c;
}

namespace {

// Fan-rotation edge colorer with palette maxdeg+1.
class FanColorer {
public:
    explicit FanColorer(const Graph& g)
        : g_(g), k_(g.max_degree() + 1), used_(g.vertex_count()) {}

    EdgeColoring run() {
        EdgeColoring c;
        for (const Edge& e : bfs_edge_order()) color_edge(e.first, e.second);
        int max_used = 0;
        for (auto& [e, col] : colors_) max_used = std::max(max_used, col);
        c.palette_size = max_used;
        c.assignment = colors_;
        return c;
    }

private:
    std::vector<Edge> bfs_edge_order() const {
        int n = g_.vertex_count();
        std::vector<Edge> order;
        std::vector<bool> seen(n, false);
        std::set<Edge> listed;
        for (int root = 0; root < n; ++root) {
            if (seen[root]) continue;
            std::queue<int> q;
            q.push(root);
            seen[root] = true;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int v : g_.neighbors(u)) {
                    Edge e = edge_key(u, v);
                    if (listed.insert(e).second) order.push_back(e);
                    if (!seen[v]) {
                        seen[v] = true;
                        q.push(v);
                    }
                }
            }
        }
        return order;
    }

    int color_at(int u, int v) const {
        auto it = colors_.find(edge_key(u, v));
        return it == colors_.end() ? 0 : it->second;
    }

    bool free_at(int v, int c) const { return !used_[v].count(c); }

    int smallest_free(int v) const {
        for (int c = 1; c <= k_; ++c)
            if (free_at(v, c)) return c;
        ensure(false, "no free color within palette");
        return 0;
    }

    void assign(int u, int v, int c) {
        int old = color_at(u, v);
        if (old) {
            used_[u].erase(old);
            used_[v].erase(old);
        }
        colors_[edge_key(u, v)] = c;
        used_[u].insert(c);
        used_[v].insert(c);
    }

    void color_edge(int u, int v) {
        // Fast path: a color free on both ends.
        for (int c = 1; c <= k_; ++c) {
            if (free_at(u, c) && free_at(v, c)) {
                assign(u, v, c);
                return;
            }
        }

        // Maximal fan of u starting at v.
        std::vector<int> fan{v};
        std::set<int> in_fan{v};
        bool grew = true;
        while (grew) {
            grew = false;
            for (int w : g_.neighbors(u)) {
                if (in_fan.count(w)) continue;
                int cw = color_at(u, w);
                if (cw != 0 && free_at(fan.back(), cw)) {
                    fan.push_back(w);
                    in_fan.insert(w);
                    grew = true;
                    break;
                }
            }
        }

        int c = smallest_free(u);
        int d = smallest_free(fan.back());
        if (!free_at(u, d)) invert_path(u, c, d);

        // First fan prefix that stays a fan and has d free at its end.
        int w = -1;
        for (int i = 0; i < static_cast<int>(fan.size()); ++i) {
            if (i > 0 && !free_at(fan[i - 1], color_at(u, fan[i]))) break;
            if (free_at(fan[i], d)) {
                w = i;
                break;
            }
        }
        ensure(w >= 0, "fan rotation target not found");

        for (int i = 0; i < w; ++i) assign(u, fan[i], color_at(u, fan[i + 1]));
        assign(u, fan[w], d);
    }

    // Flip colors c and d along the maximal alternating path starting at u.
    void invert_path(int u, int c, int d) {
        std::vector<Edge> path;
        int cur = u, prev = -1, want = d;
        while (true) {
            int next = -1;
            for (int w : g_.neighbors(cur)) {
                if (w != prev && color_at(cur, w) == want) {
                    next = w;
                    break;
                }
            }
            if (next < 0) break;
            path.push_back(edge_key(cur, next));
            prev = cur;
            cur = next;
            want = (want == d) ? c : d;
        }
        for (const Edge& e : path) {
            int col = colors_.at(e);
            assign(e.first, e.second, col == c ? d : c);
        }
    }

    const Graph& g_;
    int k_;
    std::vector<std::set<int>> used_;
    std::map<Edge, int> colors_;
};

} // namespace

EdgeColoring fallback_delta_plus_one(const Graph& g) {
    if (g.edge_count() == 0) return {};
    return FanColorer(g).run();
}

EdgeColoring extend_to_pendants(const Graph& g, EdgeColoring partial,
                                const std::vector<std::pair<int, int>>& removed_edges) {
    int palette = std::max(partial.palette_size, g.max_degree());
    std::vector<std::set<int>> used(g.vertex_count());
    for (const auto& [e, col] : partial.assignment) {
        used[e.first].insert(col);
        used[e.second].insert(col);
    }

    for (auto it = removed_edges.rbegin(); it != removed_edges.rend(); ++it) {
        auto [pendant, anchor] = *it;
        ensure(used[pendant].empty(), "pendant already colored during replay");
        int chosen = 0;
        for (int c = 1; c <= palette; ++c) {
            if (!used[anchor].count(c)) {
                chosen = c;
                break;
            }
        }
        ensure(chosen != 0, "no free color at pendant anchor");
        partial.set(pendant, anchor, chosen);
        used[pendant].insert(chosen);
        used[anchor].insert(chosen);
    }
    partial.palette_size = palette;
    return partial;
}

} // namespace splitchroma
