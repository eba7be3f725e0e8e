#pragma once

// Running-time-derived strict kernelization and the interleaved solving loop.
// The kernel either keeps the instance (already of size <= k^(1+eps)) or
// solves it with the parameterized triangle/pattern solver and emits the
// canonical constant-size instance with the same answer; the interleave loop
// alternates kernel and diminisher until the diminisher's floor branch
// decides. The parameter never increases at any step.

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "kdim/diminishers.hpp"
#include "kdim/solvers.hpp"
#include "kdim/util.hpp"

namespace kdim {

enum class KernelBranch { Unchanged, TrivialYes, TrivialNo };

struct KernelOutcome {
    Instance instance;
    int old_k = 0;
    int new_k = 0;
    KernelBranch branch = KernelBranch::Unchanged;
};

// Canonical constant-size instance with the given answer. Every parameter
// value of these graphs is at most the corresponding value forced on any
// instance with that answer, so replacing a solved instance never raises k.
inline Instance trivial_instance(ProblemKind problem, bool answer, ParamKind param,
                                 const std::optional<Pattern>& pattern = std::nullopt) {
    switch (problem) {
        case ProblemKind::Nwt: {
            if (answer) {
                Graph g(3, {{0, 1}, {0, 2}, {1, 2}},
                        std::vector<std::int64_t>{-1, -1, -1});
                return make_instance(std::move(g), problem, param);
            }
            Graph g(1, {}, std::vector<std::int64_t>{});
            return make_instance(std::move(g), problem, param);
        }
        case ProblemKind::Tc: {
            if (answer) {
                Graph g(1, {}, std::nullopt, std::vector<int>{1});
                return make_instance(std::move(g), problem, param);
            }
            Graph g(3, {}, std::nullopt, std::vector<int>{1, 2, 3});
            return make_instance(std::move(g), problem, param);
        }
        case ProblemKind::Hsi: {
            if (!pattern) throw Error("trivial_instance for hsi requires the pattern");
            if (answer) {
                return make_instance(pattern->graph(), problem, param, pattern);
            }
            return make_instance(Graph(1, {}), problem, param, pattern);
        }
    }
    throw Error("unknown problem kind");
}

// Decision threshold k^(1+eps) >= n+m, compared exactly in the integers.
inline bool kernel_keeps_instance(int k, std::size_t size, const Rational& eps) {
    return pow_geq(static_cast<std::uint64_t>(k),
                   static_cast<unsigned>(eps.den + eps.num), static_cast<std::uint64_t>(size),
                   static_cast<unsigned>(eps.den));
}

inline KernelOutcome strict_kernel(const Instance& inst, const Rational& eps) {
    if (eps.num < 1 || eps.den < 1) throw Error("kernel exponent must be a positive rational");
    KernelOutcome out;
    out.old_k = inst.k;
    if (kernel_keeps_instance(inst.k, inst.graph.size(), eps)) {
        out.instance = inst;
        out.new_k = inst.k;
        out.branch = KernelBranch::Unchanged;
        return out;
    }
    bool answer = solve_per_component(inst);
    out.instance = trivial_instance(inst.problem, answer, inst.param, inst.pattern);
    out.new_k = out.instance.k;
    out.branch = answer ? KernelBranch::TrivialYes : KernelBranch::TrivialNo;
    return out;
}

enum class InterleaveAction { Kernel, Diminish, Decide };

inline std::string to_string(InterleaveAction a) {
    switch (a) {
        case InterleaveAction::Kernel: return "kernel";
        case InterleaveAction::Diminish: return "diminish";
        case InterleaveAction::Decide: return "decide";
    }
    return "?";
}

struct InterleaveRound {
    int round = 0;
    InterleaveAction action = InterleaveAction::Kernel;
    int k_before = 0;
    int k_after = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t component_count = 0;
    double ms = 0.0;
};

struct InterleaveTrace {
    std::vector<InterleaveRound> rounds;
    bool answer = false;
    int reduced_rounds = 0;  // diminisher applications that returned Reduced
};

// Kernel once, then alternate diminisher and kernel until the diminisher's
// floor branch decides. k is recomputed from the graph after every step and
// never increases; each Reduced round at least halves it, so the number of
// Reduced rounds is at most ceil(log2 k0) + 1.
inline std::pair<bool, InterleaveTrace> interleave_solve(const Instance& inst,
                                                         const Rational& eps,
                                                         const DiminisherConfig& cfg,
                                                         int max_rounds = 0) {
    using Clock = std::chrono::steady_clock;
    InterleaveTrace trace;
    int round = 0;
    Instance current = inst;

    auto log_round = [&](InterleaveAction action, int k_before, int k_after, const Graph& g,
                         Clock::time_point start) {
        InterleaveRound row;
        row.round = round++;
        row.action = action;
        row.k_before = k_before;
        row.k_after = k_after;
        row.n = static_cast<std::size_t>(g.vertex_count());
        row.m = static_cast<std::size_t>(g.edge_count());
        row.component_count = components(g).size();
        row.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        trace.rounds.push_back(row);
    };

    {
        auto start = Clock::now();
        KernelOutcome ko = strict_kernel(current, eps);
        int before = current.k;
        current = std::move(ko.instance);
        log_round(InterleaveAction::Kernel, before, current.k, current.graph, start);
    }
    while (true) {
        auto start = Clock::now();
        if (max_rounds > 0 && trace.reduced_rounds >= max_rounds) {
            bool answer = solve_per_component(current);
            log_round(InterleaveAction::Decide, current.k, current.k, current.graph, start);
            trace.answer = answer;
            return {answer, trace};
        }
        DiminishOutcome out = diminish(current, cfg);
        if (is_decided(out)) {
            bool answer = decided_answer(out);
            log_round(InterleaveAction::Decide, current.k, current.k, current.graph, start);
            trace.answer = answer;
            return {answer, trace};
        }
        int before = current.k;
        current = std::move(std::get<Reduced>(out).instance);
        ++trace.reduced_rounds;
        log_round(InterleaveAction::Diminish, before, current.k, current.graph, start);

        start = Clock::now();
        KernelOutcome ko = strict_kernel(current, eps);
        before = current.k;
        current = std::move(ko.instance);
        log_round(InterleaveAction::Kernel, before, current.k, current.graph, start);
    }
}

// CSV schema: round,action,k,n,m,components,ms. With timing disabled the ms
// column is a constant 0.000 so outputs are byte-reproducible.
inline void write_trace_csv(const InterleaveTrace& trace, std::ostream& os,
                            bool include_timing = true) {
    os << "round,action,k,n,m,components,ms\n";
    char buf[32];
    for (const InterleaveRound& row : trace.rounds) {
        std::snprintf(buf, sizeof(buf), "%.3f", include_timing ? row.ms : 0.0);
        os << row.round << ',' << to_string(row.action) << ',' << row.k_after << ',' << row.n
           << ',' << row.m << ',' << row.component_count << ',' << buf << '\n';
    }
}

} // namespace kdim
