#pragma once

#include <optional>
#include <string>
#include <utility>

#include "kdim/graph.hpp"

namespace kdim {

// NWT: some triangle with negative weight sum?
// TC:  every 3-set of colors realized by a triangle?
// HSI: does the graph contain the pattern H as a subgraph?
enum class ProblemKind { Nwt, Tc, Hsi };

inline std::string to_string(ProblemKind p) {
    switch (p) {
        case ProblemKind::Nwt: return "nwt";
        case ProblemKind::Tc: return "tc";
        case ProblemKind::Hsi: return "hsi";
    }
    return "?";
}

inline ProblemKind parse_problem_kind(const std::string& s) {
    if (s == "nwt") return ProblemKind::Nwt;
    if (s == "tc") return ProblemKind::Tc;
    if (s == "hsi") return ProblemKind::Hsi;
    throw Error("unknown problem kind '" + s + "' (expected nwt|tc|hsi)");
}

// A problem instance: annotated graph plus the tracked parameter. k is
// always recomputed from the graph, never trusted from input.
struct Instance {
    Graph graph;
    ProblemKind problem = ProblemKind::Nwt;
    ParamKind param = ParamKind::ComponentOrder;
    int k = 0;
    std::optional<Pattern> pattern;  // HSI only
};

inline Instance make_instance(Graph g, ProblemKind problem, ParamKind param,
                              std::optional<Pattern> pattern = std::nullopt) {
    switch (problem) {
        case ProblemKind::Nwt:
            if (!g.has_weights()) throw Error("nwt instance requires edge weights");
            if (g.has_colors()) throw Error("nwt instance must be uncolored");
            if (pattern) throw Error("nwt instance takes no pattern");
            break;
        case ProblemKind::Tc:
            if (g.has_weights()) throw Error("tc instance must be unweighted");
            if (!g.has_colors()) throw Error("tc instance requires vertex colors");
            if (!g.coloring_surjective()) throw Error("tc coloring must be surjective onto [f]");
            if (pattern) throw Error("tc instance takes no pattern");
            break;
        case ProblemKind::Hsi:
            if (g.has_weights() || g.has_colors()) {
                throw Error("hsi instance must be unweighted and uncolored");
            }
            if (!pattern) throw Error("hsi instance requires a pattern");
            break;
    }
    Instance inst;
    inst.k = param_value(g, param);
    inst.graph = std::move(g);
    inst.problem = problem;
    inst.param = param;
    inst.pattern = std::move(pattern);
    return inst;
}

// Same annotations, new graph; k is recomputed.
inline Instance with_graph(const Instance& inst, Graph g) {
    return make_instance(std::move(g), inst.problem, inst.param, inst.pattern);
}

} // namespace kdim
