#include "splitchroma/pipeline.hpp"

#include <algorithm>

#include "json.hpp"
#include "splitchroma/check.hpp"
#include "splitchroma/saturator.hpp"
#include "splitchroma/split.hpp"
#include "splitchroma/stretch.hpp"

namespace splitchroma {

bool almeida_condition(const Graph& g, const SplitPartition& p) {
    int delta = g.max_degree();
    int q = static_cast<int>(p.clique.size());
    for (int v : p.independent) {
        int d = g.degree(v);
        if (2 * d >= q && 2 * d <= delta) return true;
    }
    return false;
}

namespace {

SplitPartition require_split(const Graph& g) {
    auto p = recognize_split(g);
    require(p.has_value(), "not a split graph");
    return *p;
}

// Structural verdict for a pendant-free kernel with at least one cycle.
struct KernelVerdict {
    std::string klass; // "1" | "2" | "unknown"
    std::string reason;
    bool hypothesis_mismatch = false;
};

KernelVerdict judge_kernel(const Graph& k, const SplitPartition& pk) {
    // Certificates first: an overfull same-maxdeg subgraph forces class 2.
    if (is_overfull(k) || is_neighborhood_overfull(k)) return {"2", "overfull"};

    if (universal_vertex(k).has_value()) {
        if (k.vertex_count() % 2 == 0) return {"1", "universal-even"};
        return {"1", "plantholt"};
    }

    if (k.max_degree() % 2 == 1) return {"1", "chen-odd-delta"};

    if (auto anchor = select_anchor(k, pk))
        return {"1", "theorem9", !anchor->strict_bound};

    if (almeida_condition(k, pk)) return {"1", "almeida-condition"};

    return {"unknown", "open-case"};
}

EdgeColoring restrict_to(const Graph& g, const EdgeColoring& base) {
    EdgeColoring out;
    out.palette_size = base.palette_size;
    for (const Edge& e : g.edges()) out.set(e.first, e.second, *base.color_of(e.first, e.second));
    return out;
}

EdgeColoring map_to_host(const EdgeColoring& local, const std::vector<int>& to_original) {
    EdgeColoring out;
    out.palette_size = local.palette_size;
    for (const auto& [e, col] : local.assignment)
        out.set(to_original[e.first], to_original[e.second], col);
    return out;
}

} // namespace

ClassifyReport classify_graph(const Graph& g) {
    SplitPartition p = require_split(g);
    require(is_connected(g), "disconnected input");

    ClassifyReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.delta = g.max_degree();
    r.sigma = r.n == 1 ? 1 : stretch_index_split(g, p).sigma;
    r.overfull = is_overfull(g);
    r.neighborhood_overfull = is_neighborhood_overfull(g);

    PendantKernel pk = remove_pendants(g);
    r.kernel_delta = pk.kernel.max_degree();

    if (r.overfull || r.neighborhood_overfull) {
        r.klass = "2";
        r.reason = "overfull";
        return r;
    }
    if (pk.kernel.vertex_count() <= 1) { // the whole graph is a tree
        r.klass = "1";
        r.reason = "tree";
        return r;
    }

    auto pkernel = recognize_split(pk.kernel);
    ensure(pkernel.has_value(), "pendant kernel of a split graph must be split");
    KernelVerdict kv = judge_kernel(pk.kernel, *pkernel);
    r.reason = kv.reason;
    r.hypothesis_mismatch = kv.hypothesis_mismatch;

    // Lift the kernel verdict to g: the chromatic index of g is
    // max(chromatic index of the kernel, maxdeg(g)), so a class-2 or
    // undecided kernel is absorbed whenever pendants raised the maximum
    // degree past it.
    if (kv.klass == "1") {
        r.klass = "1";
    } else if (r.delta > r.kernel_delta) {
        r.klass = "1";
    } else {
        r.klass = kv.klass;
    }
    return r;
}

std::string ClassifyReport::to_json() const {
    nlohmann::json doc{{"is_split", true},
                       {"n", n},
                       {"m", m},
                       {"delta", delta},
                       {"kernel_delta", kernel_delta},
                       {"sigma", sigma},
                       {"overfull", overfull},
                       {"neighborhood_overfull", neighborhood_overfull},
                       {"class", klass},
                       {"reason", reason}};
    if (hypothesis_mismatch) doc["hypothesis_mismatch"] = true;
    return doc.dump(2) + "\n";
}

ColorOutcome color_graph(const Graph& g, bool want_swap_log) {
    SplitPartition p = require_split(g);
    require(is_connected(g), "disconnected input");

    ColorOutcome out;
    out.delta = g.max_degree();

    PendantKernel pk = remove_pendants(g);
    EdgeColoring partial; // kernel coloring in host ids

    if (pk.kernel.vertex_count() <= 1) {
        out.route = "tree";
    } else {
        const Graph& k = pk.kernel;
        auto pkernel = recognize_split(k);
        ensure(pkernel.has_value(), "pendant kernel of a split graph must be split");
        int kd = k.max_degree();
        EdgeColoring local;

        if (universal_vertex(k).has_value()) {
            if (k.vertex_count() % 2 == 0) {
                local = color_universal_even(k);
                out.route = "universal-even";
            } else if (is_overfull(k)) {
                out.route = "fallback";
                out.fallback_cause = "overfull";
            } else {
                // Smallest-id minimum-degree vertex plays the apex role.
                int s1 = 0;
                for (int v = 0; v < k.vertex_count(); ++v)
                    if (k.degree(v) < k.degree(s1)) s1 = v;
                if (2 * k.degree(s1) <= kd) {
                    SaturationRecord rec = build_saturated(k, s1);
                    rec.base_coloring = plantholt_color(rec);
                    local = restrict_to(k, rec.base_coloring);
                    out.route = "plantholt";
                } else {
                    out.route = "fallback";
                    out.fallback_cause = "plantholt-inapplicable";
                }
            }
        } else {
            if (is_overfull(k) || is_neighborhood_overfull(k)) {
                out.route = "fallback";
                out.fallback_cause = "overfull";
            } else if (kd % 2 == 1) {
                out.route = "fallback";
                out.fallback_cause = "chen-odd-delta";
            } else if (auto anchor = select_anchor(k, *pkernel)) {
                if (anchor->strict_bound) {
                    SwapLog local_log;
                    local = color_sigma3_split(k, *pkernel,
                                               want_swap_log ? &local_log : nullptr);
                    out.route = "theorem9";
                    for (SwapRecord rec : local_log) {
                        rec.w = pk.to_original[rec.w];
                        rec.outside_edge = edge_key(pk.to_original[rec.outside_edge.first],
                                                    pk.to_original[rec.outside_edge.second]);
                        rec.donor_edge = edge_key(pk.to_original[rec.donor_edge.first],
                                                  pk.to_original[rec.donor_edge.second]);
                        out.swap_log.push_back(rec);
                    }
                } else {
                    out.route = "fallback";
                    out.fallback_cause = "hypothesis-mismatch";
                }
            } else if (almeida_condition(k, *pkernel)) {
                out.route = "fallback";
                out.fallback_cause = "almeida-condition";
            } else {
                out.route = "fallback";
                out.fallback_cause = "open-case";
            }
        }

        if (out.route == "fallback") local = fallback_delta_plus_one(k);
        partial = map_to_host(local, pk.to_original);
    }

    out.coloring = extend_to_pendants(g, partial, pk.removed_edges);

    ensure(verify_proper(g, out.coloring).empty(), "emitted coloring is not proper");
    if (out.route == "fallback")
        ensure(out.coloring.palette_size <= out.delta + 1,
               "fallback exceeded maxdeg+1 colors");
    else
        ensure(out.coloring.palette_size == out.delta,
               "constructive route must use exactly maxdeg colors");
    return out;
}

std::string ColorOutcome::report_json() const {
    nlohmann::json doc{{"palette", coloring.palette_size},
                       {"delta", delta},
                       {"route", route}};
    if (!fallback_cause.empty()) doc["fallback_cause"] = fallback_cause;
    return doc.dump(2) + "\n";
}

} // namespace splitchroma
