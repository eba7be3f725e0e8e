#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kdim/error.hpp"

namespace kdim {

using Vertex = int;
using EdgeIndex = int;

struct Edge {
    Vertex u;
    Vertex v;
};

inline bool operator==(Edge a, Edge b) { return a.u == b.u && a.v == b.v; }
inline bool operator!=(Edge a, Edge b) { return !(a == b); }
inline bool operator<(Edge a, Edge b) { return a.u != b.u ? a.u < b.u : a.v < b.v; }

// Weights are exact 64-bit integers; the magnitude cap keeps any sum of
// three edge weights free of overflow.
constexpr std::int64_t kMaxWeightMagnitude = (std::int64_t{1} << 61) - 1;

// Undirected simple graph with optional integer edge weights and optional
// positive vertex colors. Immutable after construction; adjacency is stored
// as (neighbor, edge index) pairs in CSR form.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges,
          std::optional<std::vector<std::int64_t>> weights = std::nullopt,
          std::optional<std::vector<int>> colors = std::nullopt)
        : n_(n),
          edges_(std::move(edges)),
          weights_(std::move(weights)),
          colors_(std::move(colors)) {
        canonicalize_edges();
        validate();
        build_adjacency();
    }

    // Skips the duplicate-edge scan; for graphs derived from an already
    // validated graph (induced subgraphs, edge-class unions, disjoint unions).
    static Graph unchecked(int n, std::vector<Edge> edges,
                           std::optional<std::vector<std::int64_t>> weights = std::nullopt,
                           std::optional<std::vector<int>> colors = std::nullopt) {
        Graph g;
        g.n_ = n;
        g.edges_ = std::move(edges);
        g.weights_ = std::move(weights);
        g.colors_ = std::move(colors);
        g.canonicalize_edges();
        g.build_adjacency();
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::size_t size() const { return static_cast<std::size_t>(n_) + edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }

    bool has_weights() const { return weights_.has_value(); }
    std::int64_t weight(EdgeIndex e) const { return (*weights_)[static_cast<std::size_t>(e)]; }
    const std::vector<std::int64_t>& weights() const { return *weights_; }

    bool has_colors() const { return colors_.has_value(); }
    int color(Vertex v) const { return (*colors_)[static_cast<std::size_t>(v)]; }
    const std::vector<int>& colors() const { return *colors_; }

    // Largest color id in use; 0 when uncolored or empty.
    int color_count() const {
        if (!colors_ || colors_->empty()) return 0;
        return *std::max_element(colors_->begin(), colors_->end());
    }

    // True when every color 1..color_count() occurs at least once.
    bool coloring_surjective() const {
        if (!colors_) return false;
        int f = color_count();
        std::vector<char> seen(static_cast<std::size_t>(f) + 1, 0);
        for (int c : *colors_) seen[static_cast<std::size_t>(c)] = 1;
        for (int c = 1; c <= f; ++c) {
            if (!seen[static_cast<std::size_t>(c)]) return false;
        }
        return true;
    }

    int degree(Vertex v) const {
        return static_cast<int>(adj_off_[static_cast<std::size_t>(v) + 1] -
                                adj_off_[static_cast<std::size_t>(v)]);
    }

    std::span<const std::pair<Vertex, EdgeIndex>> neighbors(Vertex v) const {
        return {adj_.data() + adj_off_[static_cast<std::size_t>(v)],
                adj_.data() + adj_off_[static_cast<std::size_t>(v) + 1]};
    }

private:
    void canonicalize_edges() {
        for (Edge& e : edges_) {
            if (e.u > e.v) std::swap(e.u, e.v);
        }
    }

    void validate() const {
        if (n_ < 0) throw Error("vertex count must be nonnegative");
        for (const Edge& e : edges_) {
            if (e.u < 0 || e.v >= n_) throw Error("edge endpoint out of range");
            if (e.u == e.v) throw Error("self-loops are not allowed");
        }
        std::vector<Edge> sorted = edges_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            if (sorted[i] == sorted[i - 1]) {
                throw Error("duplicate edge {" + std::to_string(sorted[i].u) + "," +
                            std::to_string(sorted[i].v) + "}");
            }
        }
        if (weights_) {
            if (weights_->size() != edges_.size()) throw Error("weight list size mismatch");
            for (std::int64_t w : *weights_) {
                if (w > kMaxWeightMagnitude || w < -kMaxWeightMagnitude) {
                    throw Error("edge weight magnitude exceeds 2^61 - 1");
                }
            }
        }
        if (colors_) {
            if (colors_->size() != static_cast<std::size_t>(n_)) throw Error("color list size mismatch");
            for (int c : *colors_) {
                if (c < 1) throw Error("vertex colors must be positive");
            }
        }
    }

    void build_adjacency() {
        adj_off_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (const Edge& e : edges_) {
            ++adj_off_[static_cast<std::size_t>(e.u) + 1];
            ++adj_off_[static_cast<std::size_t>(e.v) + 1];
        }
        for (std::size_t v = 0; v < static_cast<std::size_t>(n_); ++v) {
            adj_off_[v + 1] += adj_off_[v];
        }
        adj_.resize(edges_.size() * 2);
        std::vector<std::size_t> cursor(adj_off_.begin(), adj_off_.end() - 1);
        for (EdgeIndex e = 0; e < edge_count(); ++e) {
            Edge ed = edges_[static_cast<std::size_t>(e)];
            adj_[cursor[static_cast<std::size_t>(ed.u)]++] = {ed.v, e};
            adj_[cursor[static_cast<std::size_t>(ed.v)]++] = {ed.u, e};
        }
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::optional<std::vector<std::int64_t>> weights_;
    std::optional<std::vector<int>> colors_;
    std::vector<std::size_t> adj_off_{0};
    std::vector<std::pair<Vertex, EdgeIndex>> adj_;
};

// Structural parameters, ordered: degeneracy <= max degree <= component order.
enum class ParamKind { ComponentOrder, MaxDegree, Degeneracy };

inline std::string to_string(ParamKind p) {
    switch (p) {
        case ParamKind::ComponentOrder: return "component";
        case ParamKind::MaxDegree: return "maxdeg";
        case ParamKind::Degeneracy: return "degeneracy";
    }
    return "?";
}

inline ParamKind parse_param_kind(const std::string& s) {
    if (s == "component") return ParamKind::ComponentOrder;
    if (s == "maxdeg") return ParamKind::MaxDegree;
    if (s == "degeneracy") return ParamKind::Degeneracy;
    throw Error("unknown parameter kind '" + s + "' (expected component|maxdeg|degeneracy)");
}

// Connected component vertex sets, each ascending, ordered by smallest member.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (label[static_cast<std::size_t>(s)] != -1) continue;
        label[static_cast<std::size_t>(s)] = next;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (auto [w, e] : g.neighbors(v)) {
                (void)e;
                if (label[static_cast<std::size_t>(w)] == -1) {
                    label[static_cast<std::size_t>(w)] = next;
                    queue.push_back(w);
                }
            }
        }
        ++next;
    }
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(next));
    for (Vertex v = 0; v < n; ++v) {
        out[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
    }
    return out;
}

// Order of the largest connected component; 0 only for the empty graph.
inline int largest_component_order(const Graph& g) {
    int best = 0;
    for (const auto& comp : components(g)) {
        best = std::max(best, static_cast<int>(comp.size()));
    }
    return best;
}

inline int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        best = std::max(best, g.degree(v));
    }
    return best;
}

// Peeling order: repeatedly remove a minimum-degree vertex (ties broken by
// smallest id). d is the largest degree seen at removal time, and every
// vertex has at most d neighbors ordered after it.
struct DegeneracyOrdering {
    std::vector<Vertex> order;  // removal sequence
    std::vector<int> position;  // inverse of order
    int d = 0;
};

inline DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    const int n = g.vertex_count();
    DegeneracyOrdering out;
    out.order.reserve(static_cast<std::size_t>(n));
    out.position.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::set<std::pair<int, Vertex>> pending;
    for (Vertex v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        pending.emplace(deg[static_cast<std::size_t>(v)], v);
    }
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    while (!pending.empty()) {
        auto [dv, v] = *pending.begin();
        pending.erase(pending.begin());
        removed[static_cast<std::size_t>(v)] = 1;
        out.position[static_cast<std::size_t>(v)] = static_cast<int>(out.order.size());
        out.order.push_back(v);
        out.d = std::max(out.d, dv);
        for (auto [w, e] : g.neighbors(v)) {
            (void)e;
            if (removed[static_cast<std::size_t>(w)]) continue;
            pending.erase({deg[static_cast<std::size_t>(w)], w});
            --deg[static_cast<std::size_t>(w)];
            pending.emplace(deg[static_cast<std::size_t>(w)], w);
        }
    }
    return out;
}

inline int degeneracy(const Graph& g) { return degeneracy_ordering(g).d; }

inline int param_value(const Graph& g, ParamKind p) {
    switch (p) {
        case ParamKind::ComponentOrder: return largest_component_order(g);
        case ParamKind::MaxDegree: return max_degree(g);
        case ParamKind::Degeneracy: return degeneracy(g);
    }
    return 0;
}

// Maps vertices/edges of a derived graph back to the graph it was built
// from; weights and colors of copies always equal those of the originals.
struct ProvenanceMap {
    std::vector<Vertex> vertex_origin;
    std::vector<EdgeIndex> edge_origin;

    static ProvenanceMap identity(const Graph& g) {
        ProvenanceMap p;
        p.vertex_origin.resize(static_cast<std::size_t>(g.vertex_count()));
        for (Vertex v = 0; v < g.vertex_count(); ++v) p.vertex_origin[static_cast<std::size_t>(v)] = v;
        p.edge_origin.resize(static_cast<std::size_t>(g.edge_count()));
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) p.edge_origin[static_cast<std::size_t>(e)] = e;
        return p;
    }
};

// Subgraph induced on `verts` (ascending, distinct), vertices renumbered in
// that order. Weights and colors are copied.
inline std::pair<Graph, ProvenanceMap> induced_subgraph(const Graph& g,
                                                        const std::vector<Vertex>& verts) {
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    std::vector<EdgeIndex> edge_origin;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        Vertex v = verts[i];
        for (auto [w, e] : g.neighbors(v)) {
            if (v < w && local[static_cast<std::size_t>(w)] >= 0) {
                edges.push_back({static_cast<Vertex>(i), local[static_cast<std::size_t>(w)]});
                edge_origin.push_back(e);
            }
        }
    }
    std::optional<std::vector<std::int64_t>> weights;
    if (g.has_weights()) {
        weights.emplace();
        weights->reserve(edge_origin.size());
        for (EdgeIndex e : edge_origin) weights->push_back(g.weight(e));
    }
    std::optional<std::vector<int>> colors;
    if (g.has_colors()) {
        colors.emplace();
        colors->reserve(verts.size());
        for (Vertex v : verts) colors->push_back(g.color(v));
    }
    ProvenanceMap prov;
    prov.vertex_origin = verts;
    prov.edge_origin = std::move(edge_origin);
    return {Graph::unchecked(static_cast<int>(verts.size()), std::move(edges),
                             std::move(weights), std::move(colors)),
            std::move(prov)};
}

// Concatenates the parts with consecutive vertex numbering and no edges
// between parts; provenance entries are passed through unchanged (they keep
// referring to whatever graph the parts were derived from). Parts are
// consumed to keep the memory peak close to the output size.
inline std::pair<Graph, ProvenanceMap> disjoint_union(
    std::vector<std::pair<Graph, ProvenanceMap>> parts) {
    std::size_t total_n = 0;
    std::size_t total_m = 0;
    bool weighted = false;
    bool colored = false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        total_n += static_cast<std::size_t>(parts[i].first.vertex_count());
        total_m += static_cast<std::size_t>(parts[i].first.edge_count());
        if (i == 0) {
            weighted = parts[i].first.has_weights();
            colored = parts[i].first.has_colors();
        } else if (parts[i].first.has_weights() != weighted ||
                   parts[i].first.has_colors() != colored) {
            throw Error("disjoint_union: parts disagree on weights/colors");
        }
    }
    std::vector<Edge> edges;
    edges.reserve(total_m);
    std::optional<std::vector<std::int64_t>> weights;
    if (weighted) {
        weights.emplace();
        weights->reserve(total_m);
    }
    std::optional<std::vector<int>> colors;
    if (colored) {
        colors.emplace();
        colors->reserve(total_n);
    }
    ProvenanceMap prov;
    prov.vertex_origin.reserve(total_n);
    prov.edge_origin.reserve(total_m);
    int offset = 0;
    for (auto& [part, part_prov] : parts) {
        for (const Edge& e : part.edges()) {
            edges.push_back({e.u + offset, e.v + offset});
        }
        if (weighted) {
            weights->insert(weights->end(), part.weights().begin(), part.weights().end());
        }
        if (colored) {
            colors->insert(colors->end(), part.colors().begin(), part.colors().end());
        }
        prov.vertex_origin.insert(prov.vertex_origin.end(), part_prov.vertex_origin.begin(),
                                  part_prov.vertex_origin.end());
        prov.edge_origin.insert(prov.edge_origin.end(), part_prov.edge_origin.begin(),
                                part_prov.edge_origin.end());
        offset += part.vertex_count();
        part = Graph();
        part_prov = ProvenanceMap();
    }
    return {Graph::unchecked(offset, std::move(edges), std::move(weights), std::move(colors)),
            std::move(prov)};
}

// The fixed connected pattern graph H, order > 1, unweighted and uncolored.
class Pattern {
public:
    explicit Pattern(Graph g) : graph_(std::move(g)) {
        if (graph_.vertex_count() < 2) throw Error("pattern must have order > 1");
        if (graph_.has_weights() || graph_.has_colors()) {
            throw Error("pattern must be unweighted and uncolored");
        }
        if (components(graph_).size() != 1) throw Error("pattern must be connected");
    }

    const Graph& graph() const { return graph_; }
    int order() const { return graph_.vertex_count(); }
    int pattern_edge_count() const { return graph_.edge_count(); }

private:
    Graph graph_;
};

inline Pattern pattern_clique(int c) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < c; ++u) {
        for (Vertex v = u + 1; v < c; ++v) edges.push_back({u, v});
    }
    return Pattern(Graph(c, std::move(edges)));
}

inline Pattern pattern_path(int c) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < c; ++v) edges.push_back({v, v + 1});
    return Pattern(Graph(c, std::move(edges)));
}

inline Pattern pattern_cycle(int c) {
    if (c < 3) throw Error("cycle pattern needs order >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < c; ++v) edges.push_back({v, v + 1});
    edges.push_back({0, c - 1});
    return Pattern(Graph(c, std::move(edges)));
}

} // namespace kdim
