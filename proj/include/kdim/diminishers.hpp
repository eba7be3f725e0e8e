#pragma once

// The three strong linear-time parameter diminishers. Each either decides the
// instance outright (parameter at or below its floor constant) or outputs an
// equivalent instance whose parameter is at most half the input's:
//
//   component order: round-robin partition each oversized component into 4c
//     classes and take the induced subgraph of every c-subset of classes.
//   max degree: split the edges by a bounded-load improper coloring and take
//     the union of every budget-subset of color classes over all vertices.
//   degeneracy: split each vertex's right-going edges (under a degeneracy
//     ordering) round-robin into 4*budget classes, same subset expansion.
//
// Every output part is an exact annotated copy of input material, so any
// triangle (or small pattern) survives in some part and nothing new appears.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kdim/edge_coloring.hpp"
#include "kdim/solvers.hpp"
#include "kdim/util.hpp"

namespace kdim {

// OrderSquared budgets c^2 edges per pattern (thresholds 4c^2); ExactEdges
// budgets the pattern's true edge count (thresholds 4*m_H), shrinking the
// subset blow-up without affecting which subgraphs survive.
enum class EdgeBudget { OrderSquared, ExactEdges };

struct DiminisherConfig {
    int c = 3;              // pattern order (3 for NWT/TC)
    int pattern_edges = 3;  // m_H (3 for NWT/TC)
    EdgeBudget budget_mode = EdgeBudget::ExactEdges;
    // Hard cap on vertex+edge copies in one reduction output.
    std::uint64_t max_output_size = 200'000'000;

    int edge_budget() const {
        return budget_mode == EdgeBudget::OrderSquared ? c * c : pattern_edges;
    }
    int vertex_floor() const { return 4 * c; }
    int edge_floor() const { return 4 * edge_budget(); }

    static DiminisherConfig for_instance(const Instance& inst,
                                         EdgeBudget mode = EdgeBudget::ExactEdges) {
        DiminisherConfig cfg;
        cfg.budget_mode = mode;
        if (inst.problem == ProblemKind::Hsi) {
            cfg.c = inst.pattern->order();
            cfg.pattern_edges = inst.pattern->pattern_edge_count();
        }
        return cfg;
    }
};

struct DiminishStats {
    int old_k = 0;
    int new_k = 0;
    std::size_t old_size = 0;  // n + m
    std::size_t new_size = 0;
    std::size_t parts = 0;         // graphs concatenated into the output
    std::size_t subset_count = 0;  // subsets expanded (per oversized component for construction 1)
    std::size_t classes = 0;       // partition classes (4c, padded f, or 4*budget)
    double size_factor = 0.0;
};

struct Decided {
    bool answer = false;
};

struct Reduced {
    Instance instance;
    ProvenanceMap provenance;
    DiminishStats stats;
};

using DiminishOutcome = std::variant<Decided, Reduced>;

inline bool is_decided(const DiminishOutcome& out) { return std::holds_alternative<Decided>(out); }
inline bool decided_answer(const DiminishOutcome& out) { return std::get<Decided>(out).answer; }
inline const Reduced& reduced(const DiminishOutcome& out) { return std::get<Reduced>(out); }

namespace detail {

inline void check_output_budget(std::uint64_t projected, const DiminisherConfig& cfg) {
    if (projected > cfg.max_output_size) {
        throw Error("diminisher output would exceed the size cap (" +
                    std::to_string(projected) + " > " + std::to_string(cfg.max_output_size) +
                    " vertex+edge copies); see DiminisherConfig::max_output_size");
    }
}

inline DiminishStats finish_stats(const Instance& in, const Instance& out, std::size_t parts,
                                  std::size_t subset_count, std::size_t classes) {
    DiminishStats st;
    st.old_k = in.k;
    st.new_k = out.k;
    st.old_size = in.graph.size();
    st.new_size = out.graph.size();
    st.parts = parts;
    st.subset_count = subset_count;
    st.classes = classes;
    st.size_factor = static_cast<double>(st.new_size) /
                     static_cast<double>(std::max<std::size_t>(st.old_size, 1));
    return st;
}

// Shared by the max-degree and degeneracy constructions: all n vertices, the
// union of the chosen edge classes, for every budget-subset of classes.
inline DiminishOutcome expand_edge_classes(const Instance& inst,
                                           const std::vector<std::vector<EdgeIndex>>& classes,
                                           const DiminisherConfig& cfg) {
    const Graph& g = inst.graph;
    const int f = static_cast<int>(classes.size());
    const int budget = cfg.edge_budget();
    const std::uint64_t subsets = binomial(static_cast<std::uint64_t>(f),
                                           static_cast<std::uint64_t>(budget));
    std::uint64_t projected = saturating_mul(subsets, static_cast<std::uint64_t>(g.vertex_count()));
    projected = saturating_add(
        projected, saturating_mul(static_cast<std::uint64_t>(g.edge_count()),
                                  binomial(static_cast<std::uint64_t>(f - 1),
                                           static_cast<std::uint64_t>(budget - 1))));
    check_output_budget(projected, cfg);

    std::optional<std::vector<int>> part_colors;
    if (g.has_colors()) part_colors = g.colors();

    std::vector<std::pair<Graph, ProvenanceMap>> parts;
    parts.reserve(static_cast<std::size_t>(subsets));
    for_each_combination(f, budget, [&](const std::vector<int>& pick) {
        std::vector<Edge> edges;
        std::vector<EdgeIndex> origin;
        for (int p : pick) {
            for (EdgeIndex e : classes[static_cast<std::size_t>(p)]) {
                edges.push_back(g.edge(e));
                origin.push_back(e);
            }
        }
        std::optional<std::vector<std::int64_t>> weights;
        if (g.has_weights()) {
            weights.emplace();
            weights->reserve(origin.size());
            for (EdgeIndex e : origin) weights->push_back(g.weight(e));
        }
        ProvenanceMap prov;
        prov.vertex_origin.resize(static_cast<std::size_t>(g.vertex_count()));
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            prov.vertex_origin[static_cast<std::size_t>(v)] = v;
        }
        prov.edge_origin = std::move(origin);
        parts.emplace_back(Graph::unchecked(g.vertex_count(), std::move(edges),
                                            std::move(weights), part_colors),
                           std::move(prov));
    });
    auto [merged, prov] = disjoint_union(std::move(parts));
    Instance out = with_graph(inst, std::move(merged));
    DiminishStats st = finish_stats(inst, out, static_cast<std::size_t>(subsets),
                                    static_cast<std::size_t>(subsets),
                                    static_cast<std::size_t>(f));
    return Reduced{std::move(out), std::move(prov), st};
}

} // namespace detail

// Construction for the parameter "order of the largest connected component".
// Components of order <= l/2 are copied verbatim; each larger component is
// partitioned round-robin (ascending vertex id) into 4c classes, and the
// induced subgraph of every c-subset of classes is appended.
inline DiminishOutcome diminish_component_order(const Instance& inst,
                                                const DiminisherConfig& cfg) {
    if (inst.param != ParamKind::ComponentOrder) {
        throw Error("diminish_component_order requires the component parameter");
    }
    const Graph& g = inst.graph;
    auto comps = components(g);
    int ell = 0;
    for (const auto& comp : comps) ell = std::max(ell, static_cast<int>(comp.size()));
    const int floor_c = cfg.vertex_floor();
    if (ell <= floor_c) return Decided{solve_per_component(inst)};

    const int num_classes = 4 * cfg.c;
    const std::uint64_t subsets = binomial(static_cast<std::uint64_t>(num_classes),
                                           static_cast<std::uint64_t>(cfg.c));
    // Per-component edge counts for the size estimate.
    std::vector<int> comp_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (Vertex v : comps[i]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<std::uint64_t> comp_edges(comps.size(), 0);
    for (const Edge& e : g.edges()) {
        ++comp_edges[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(e.u)])];
    }
    const std::uint64_t per_class = binomial(static_cast<std::uint64_t>(num_classes - 1),
                                             static_cast<std::uint64_t>(cfg.c - 1));
    std::uint64_t projected = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::uint64_t sz = comps[i].size() + comp_edges[i];
        bool oversized = 2 * static_cast<int>(comps[i].size()) > ell;
        projected = saturating_add(projected, oversized ? saturating_mul(per_class, sz) : sz);
    }
    detail::check_output_budget(projected, cfg);

    std::vector<std::pair<Graph, ProvenanceMap>> parts;
    std::vector<int> class_of(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> chosen(static_cast<std::size_t>(num_classes), 0);
    std::vector<Vertex> bucket;
    for (const auto& comp : comps) {
        if (2 * static_cast<int>(comp.size()) <= ell) {
            parts.push_back(induced_subgraph(g, comp));
            continue;
        }
        // Class of the q-th vertex (1-based, ascending id) is q mod 4c.
        for (std::size_t q = 0; q < comp.size(); ++q) {
            class_of[static_cast<std::size_t>(comp[q])] =
                static_cast<int>((q + 1) % static_cast<std::size_t>(num_classes));
        }
        for_each_combination(num_classes, cfg.c, [&](const std::vector<int>& pick) {
            for (int p : pick) chosen[static_cast<std::size_t>(p)] = 1;
            bucket.clear();
            for (Vertex v : comp) {
                if (chosen[static_cast<std::size_t>(class_of[static_cast<std::size_t>(v)])]) {
                    bucket.push_back(v);
                }
            }
            parts.push_back(induced_subgraph(g, bucket));
            for (int p : pick) chosen[static_cast<std::size_t>(p)] = 0;
        });
    }
    std::size_t part_count = parts.size();
    auto [merged, prov] = disjoint_union(std::move(parts));
    Instance out = with_graph(inst, std::move(merged));
    DiminishStats st = detail::finish_stats(inst, out, part_count,
                                            static_cast<std::size_t>(subsets),
                                            static_cast<std::size_t>(num_classes));
    return Reduced{std::move(out), std::move(prov), st};
}

// Construction for the parameter "maximum degree". Edges are partitioned by a
// greedy bounded-load coloring with b = 4*budget; empty classes are padded in
// if the greedy pass used fewer than b colors, then every budget-subset of
// color classes becomes one part.
inline DiminishOutcome diminish_max_degree(const Instance& inst, const DiminisherConfig& cfg) {
    if (inst.param != ParamKind::MaxDegree) {
        throw Error("diminish_max_degree requires the maxdeg parameter");
    }
    const Graph& g = inst.graph;
    const int threshold = cfg.edge_floor();
    if (max_degree(g) <= threshold) return Decided{solve_per_component(inst)};

    EdgeColoring col = greedy_edge_color(g, threshold);
    const int f = std::max(col.f, threshold);
    std::vector<std::vector<EdgeIndex>> classes(static_cast<std::size_t>(f));
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        classes[static_cast<std::size_t>(col.color[static_cast<std::size_t>(e)] - 1)].push_back(e);
    }
    return detail::expand_edge_classes(inst, classes, cfg);
}

// Construction for the parameter "degeneracy". Each vertex's right-going
// edges under a degeneracy ordering (enumerated by ascending position of the
// other endpoint) are split round-robin into 4*budget classes.
inline DiminishOutcome diminish_degeneracy(const Instance& inst, const DiminisherConfig& cfg) {
    if (inst.param != ParamKind::Degeneracy) {
        throw Error("diminish_degeneracy requires the degeneracy parameter");
    }
    const Graph& g = inst.graph;
    DegeneracyOrdering ord = degeneracy_ordering(g);
    const int threshold = cfg.edge_floor();
    if (ord.d <= threshold) return Decided{solve_per_component(inst)};

    std::vector<std::vector<EdgeIndex>> classes(static_cast<std::size_t>(threshold));
    std::vector<std::pair<int, EdgeIndex>> right;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        right.clear();
        for (auto [w, e] : g.neighbors(v)) {
            if (ord.position[static_cast<std::size_t>(w)] >
                ord.position[static_cast<std::size_t>(v)]) {
                right.emplace_back(ord.position[static_cast<std::size_t>(w)], e);
            }
        }
        std::sort(right.begin(), right.end());
        for (std::size_t i = 0; i < right.size(); ++i) {
            // The (i+1)-th right edge of v lands in class (i+1) mod 4*budget.
            classes[(i + 1) % static_cast<std::size_t>(threshold)].push_back(right[i].second);
        }
    }
    // Class edge lists must be deterministic: reorder by edge index.
    for (auto& cls : classes) std::sort(cls.begin(), cls.end());
    return detail::expand_edge_classes(inst, classes, cfg);
}

inline DiminishOutcome diminish(const Instance& inst, const DiminisherConfig& cfg) {
    switch (inst.param) {
        case ParamKind::ComponentOrder: return diminish_component_order(inst, cfg);
        case ParamKind::MaxDegree: return diminish_max_degree(inst, cfg);
        case ParamKind::Degeneracy: return diminish_degeneracy(inst, cfg);
    }
    throw Error("unknown parameter kind");
}

inline int diminisher_floor(ParamKind param, const DiminisherConfig& cfg) {
    return param == ParamKind::ComponentOrder ? cfg.vertex_floor() : cfg.edge_floor();
}

// Empirical re-check of one diminisher application: answer preservation,
// halving bound, strictness, blow-up bound, and exact copy fidelity under the
// provenance map. Answers are compared via the per-component solver; the
// verification suite additionally compares against the cubic oracles.
struct DiminishCheck {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline DiminishCheck verify_diminisher(const Instance& inst, const DiminishOutcome& out,
                                       const DiminisherConfig& cfg) {
    DiminishCheck report;
    auto flag = [&](const std::string& msg) { report.violations.push_back(msg); };
    const bool input_answer = solve_per_component(inst);
    if (is_decided(out)) {
        if (decided_answer(out) != input_answer) flag("decided answer differs from solver");
        return report;
    }
    const Reduced& red = reduced(out);
    if (solve_per_component(red.instance) != input_answer) {
        flag("reduced instance answer differs from input answer");
    }
    const int floor_c = diminisher_floor(inst.param, cfg);
    if (red.stats.new_k >= red.stats.old_k) flag("parameter did not strictly decrease");
    if (2 * red.stats.new_k > red.stats.old_k && red.stats.new_k > floor_c) {
        flag("halving bound violated: new k " + std::to_string(red.stats.new_k) + " vs old " +
             std::to_string(red.stats.old_k) + " (floor " + std::to_string(floor_c) + ")");
    }
    std::uint64_t subset_bound =
        inst.param == ParamKind::ComponentOrder
            ? binomial(static_cast<std::uint64_t>(cfg.vertex_floor()),
                       static_cast<std::uint64_t>(cfg.c))
            : binomial(static_cast<std::uint64_t>(red.stats.classes),
                       static_cast<std::uint64_t>(cfg.edge_budget()));
    if (red.stats.subset_count > subset_bound) flag("subset count exceeds its bound");
    if (static_cast<std::uint64_t>(red.stats.new_size) >
        saturating_mul(subset_bound, static_cast<std::uint64_t>(red.stats.old_size))) {
        flag("output size exceeds the linear blow-up bound");
    }
    const Graph& g = inst.graph;
    const Graph& h = red.instance.graph;
    const ProvenanceMap& prov = red.provenance;
    if (prov.vertex_origin.size() != static_cast<std::size_t>(h.vertex_count()) ||
        prov.edge_origin.size() != static_cast<std::size_t>(h.edge_count())) {
        flag("provenance size mismatch");
        return report;
    }
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        Vertex ov = prov.vertex_origin[static_cast<std::size_t>(v)];
        if (ov < 0 || ov >= g.vertex_count()) {
            flag("vertex origin out of range");
            break;
        }
        if (g.has_colors() && h.color(v) != g.color(ov)) {
            flag("copied vertex color differs from original");
            break;
        }
    }
    for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
        EdgeIndex oe = prov.edge_origin[static_cast<std::size_t>(e)];
        if (oe < 0 || oe >= g.edge_count()) {
            flag("edge origin out of range");
            break;
        }
        Edge ne = h.edge(e);
        Edge orig = g.edge(oe);
        Vertex a = prov.vertex_origin[static_cast<std::size_t>(ne.u)];
        Vertex b = prov.vertex_origin[static_cast<std::size_t>(ne.v)];
        if (std::min(a, b) != orig.u || std::max(a, b) != orig.v) {
            flag("copied edge endpoints do not match the original edge");
            break;
        }
        if (g.has_weights() && h.weight(e) != g.weight(oe)) {
            flag("copied edge weight differs from original");
            break;
        }
    }
    return report;
}

} // namespace kdim
