#pragma once

// GKF text format for problem instances.
//
//   # comment (anywhere)
//   problem nwt|tc|hsi          first statement, required
//   param component|maxdeg|degeneracy      optional
//   nodes <n>                   before any edge/color line
//   edge <u> <v> <w>            nwt edges carry a weight
//   edge <u> <v>                tc/hsi edges and pattern edges do not
//   color <v> <c>               tc only; every vertex needs exactly one
//   pattern <c>                 hsi only; following edge lines describe H
//
// The writer emits a canonical form (sorted edges and colors), so identical
// instances serialize to identical bytes.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "kdim/instance.hpp"

namespace kdim {

namespace detail {

inline bool parse_int64(const std::string& tok, std::int64_t& out) {
    if (tok.empty()) return false;
    std::size_t start = tok[0] == '-' ? 1 : 0;
    if (start == tok.size()) return false;
    if (tok.find_first_not_of("0123456789", start) != std::string::npos) return false;
    if (tok.size() - start > 19) return false;
    try {
        out = std::stoll(tok);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

} // namespace detail

inline Instance parse_gkf(const std::string& text) {
    std::optional<ProblemKind> problem;
    std::optional<ParamKind> param;
    std::optional<int> nodes;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> edge_seen;
    std::vector<std::int64_t> weights;
    std::vector<std::pair<Vertex, int>> color_lines;
    std::vector<char> color_seen;
    bool in_pattern = false;
    std::optional<int> pattern_nodes;
    std::vector<Edge> pattern_edges;

    std::istringstream stream(text);
    std::string line;
    int lineno = 0;

    auto want_int = [&](const std::string& tok, std::int64_t lo, std::int64_t hi,
                        const std::string& what) -> std::int64_t {
        std::int64_t v = 0;
        if (!detail::parse_int64(tok, v)) {
            throw ParseError(lineno, "expected integer for " + what + ", got '" + tok + "'");
        }
        if (v < lo || v > hi) throw ParseError(lineno, what + " out of range: " + tok);
        return v;
    };

    while (std::getline(stream, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = detail::tokens_of(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];

        if (key == "problem") {
            if (problem) throw ParseError(lineno, "duplicate problem line");
            if (toks.size() != 2) throw ParseError(lineno, "usage: problem nwt|tc|hsi");
            try {
                problem = parse_problem_kind(toks[1]);
            } catch (const Error& e) {
                throw ParseError(lineno, e.what());
            }
            continue;
        }
        if (!problem) throw ParseError(lineno, "the problem line must come first");

        if (key == "param") {
            if (param) throw ParseError(lineno, "duplicate param line");
            if (toks.size() != 2) throw ParseError(lineno, "usage: param component|maxdeg|degeneracy");
            try {
                param = parse_param_kind(toks[1]);
            } catch (const Error& e) {
                throw ParseError(lineno, e.what());
            }
        } else if (key == "nodes") {
            if (nodes) throw ParseError(lineno, "duplicate nodes line");
            if (toks.size() != 2) throw ParseError(lineno, "usage: nodes <n>");
            nodes = static_cast<int>(want_int(toks[1], 0, 1000000000, "node count"));
        } else if (key == "pattern") {
            if (*problem != ProblemKind::Hsi) {
                throw ParseError(lineno, "pattern section is only valid for problem hsi");
            }
            if (in_pattern) throw ParseError(lineno, "duplicate pattern section");
            if (toks.size() != 2) throw ParseError(lineno, "usage: pattern <order>");
            pattern_nodes = static_cast<int>(want_int(toks[1], 2, kMaxPatternOrder, "pattern order"));
            in_pattern = true;
        } else if (key == "edge") {
            if (in_pattern) {
                if (toks.size() != 3) throw ParseError(lineno, "pattern edges take no weight");
                Vertex u = static_cast<Vertex>(want_int(toks[1], 0, *pattern_nodes - 1, "pattern endpoint"));
                Vertex v = static_cast<Vertex>(want_int(toks[2], 0, *pattern_nodes - 1, "pattern endpoint"));
                if (u == v) throw ParseError(lineno, "self-loop in pattern");
                pattern_edges.push_back({u, v});
                continue;
            }
            if (!nodes) throw ParseError(lineno, "nodes must be declared before edges");
            bool weighted = *problem == ProblemKind::Nwt;
            if (toks.size() != (weighted ? 4u : 3u)) {
                throw ParseError(lineno, weighted ? "nwt edges need a weight: edge <u> <v> <w>"
                                                  : "usage: edge <u> <v> (weights only for nwt)");
            }
            Vertex u = static_cast<Vertex>(want_int(toks[1], 0, *nodes - 1, "edge endpoint"));
            Vertex v = static_cast<Vertex>(want_int(toks[2], 0, *nodes - 1, "edge endpoint"));
            if (u == v) throw ParseError(lineno, "self-loops are not allowed");
            if (u > v) std::swap(u, v);
            std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
            if (!edge_seen.insert(key).second) {
                throw ParseError(lineno, "duplicate edge {" + std::to_string(u) + "," +
                                             std::to_string(v) + "}");
            }
            edges.push_back({u, v});
            if (weighted) {
                weights.push_back(want_int(toks[3], -kMaxWeightMagnitude, kMaxWeightMagnitude,
                                           "edge weight"));
            }
        } else if (key == "color") {
            if (*problem != ProblemKind::Tc) throw ParseError(lineno, "colors are only valid for problem tc");
            if (!nodes) throw ParseError(lineno, "nodes must be declared before colors");
            if (toks.size() != 3) throw ParseError(lineno, "usage: color <v> <c>");
            Vertex v = static_cast<Vertex>(want_int(toks[1], 0, *nodes - 1, "vertex id"));
            int c = static_cast<int>(want_int(toks[2], 1, 1000000000, "color"));
            if (color_seen.empty()) color_seen.assign(static_cast<std::size_t>(*nodes), 0);
            if (color_seen[static_cast<std::size_t>(v)]) {
                throw ParseError(lineno, "duplicate color for vertex " + std::to_string(v));
            }
            color_seen[static_cast<std::size_t>(v)] = 1;
            color_lines.emplace_back(v, c);
        } else {
            throw ParseError(lineno, "unknown keyword '" + key + "'");
        }
    }

    if (!problem) throw ParseError(lineno, "missing problem line");
    if (!nodes) throw ParseError(lineno, "missing nodes line");

    std::optional<std::vector<std::int64_t>> weight_opt;
    if (*problem == ProblemKind::Nwt) weight_opt = std::move(weights);
    std::optional<std::vector<int>> color_opt;
    if (*problem == ProblemKind::Tc) {
        std::vector<int> colors(static_cast<std::size_t>(*nodes), 0);
        for (const auto& [v, c] : color_lines) colors[static_cast<std::size_t>(v)] = c;
        for (Vertex v = 0; v < *nodes; ++v) {
            if (colors[static_cast<std::size_t>(v)] == 0) {
                throw ParseError(lineno, "vertex " + std::to_string(v) + " has no color");
            }
        }
        color_opt = std::move(colors);
    }
    Graph g(*nodes, std::move(edges), std::move(weight_opt), std::move(color_opt));
    if (*problem == ProblemKind::Tc && !g.coloring_surjective()) {
        throw ParseError(lineno, "coloring is not surjective onto [f]");
    }
    std::optional<Pattern> pattern;
    if (*problem == ProblemKind::Hsi) {
        if (!pattern_nodes) throw ParseError(lineno, "hsi instance needs a pattern section");
        try {
            pattern = Pattern(Graph(*pattern_nodes, std::move(pattern_edges)));
        } catch (const Error& e) {
            throw ParseError(lineno, std::string("invalid pattern: ") + e.what());
        }
    }
    try {
        return make_instance(std::move(g), *problem, param.value_or(ParamKind::ComponentOrder),
                             std::move(pattern));
    } catch (const Error& e) {
        throw ParseError(lineno, e.what());
    }
}

inline std::string write_gkf(const Instance& inst) {
    const Graph& g = inst.graph;
    std::ostringstream out;
    out << "problem " << to_string(inst.problem) << '\n';
    out << "param " << to_string(inst.param) << '\n';
    out << "nodes " << g.vertex_count() << '\n';
    std::vector<EdgeIndex> order(static_cast<std::size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](EdgeIndex a, EdgeIndex b) { return g.edge(a) < g.edge(b); });
    for (EdgeIndex e : order) {
        Edge ed = g.edge(e);
        out << "edge " << ed.u << ' ' << ed.v;
        if (g.has_weights()) out << ' ' << g.weight(e);
        out << '\n';
    }
    if (g.has_colors()) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            out << "color " << v << ' ' << g.color(v) << '\n';
        }
    }
    if (inst.pattern) {
        const Graph& h = inst.pattern->graph();
        out << "pattern " << h.vertex_count() << '\n';
        std::vector<Edge> hedges = h.edges();
        std::sort(hedges.begin(), hedges.end());
        for (const Edge& e : hedges) out << "edge " << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

// Provenance sidecar: one `v <new> <orig>` line per vertex and one
// `e <new-u> <new-v> <orig-u> <orig-v>` line per edge.
inline std::string write_provenance(const Graph& original, const Graph& reduced,
                                    const ProvenanceMap& prov) {
    std::ostringstream out;
    for (Vertex v = 0; v < reduced.vertex_count(); ++v) {
        out << "v " << v << ' ' << prov.vertex_origin[static_cast<std::size_t>(v)] << '\n';
    }
    for (EdgeIndex e = 0; e < reduced.edge_count(); ++e) {
        Edge ne = reduced.edge(e);
        Edge oe = original.edge(prov.edge_origin[static_cast<std::size_t>(e)]);
        out << "e " << ne.u << ' ' << ne.v << ' ' << oe.u << ' ' << oe.v << '\n';
    }
    return out.str();
}

} // namespace kdim
