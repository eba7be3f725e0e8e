#pragma once

// Seeded property suite: every check the library claims as an invariant,
// re-verified empirically against the brute-force oracles. Used by the CLI
// `verify` subcommand and by the acceptance tests.

#include <cmath>
#include <cstdint>
#include <future>
#include <ostream>
#include <string>
#include <vector>

#include "kdim/diminishers.hpp"
#include "kdim/edge_coloring.hpp"
#include "kdim/generate.hpp"
#include "kdim/kernelize.hpp"
#include "kdim/oracles.hpp"
#include "kdim/turing_kernel.hpp"

namespace kdim {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int trials = 300;  // per diminisher/problem combination
    int jobs = 1;
};

struct VerifyReport {
    std::size_t checks = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

inline double grid_p(std::uint64_t trial) {
    static constexpr double grid[] = {0.05, 0.10, 0.20, 0.35, 0.50, 0.70};
    return grid[trial % 6];
}

inline Instance random_verify_instance(ProblemKind problem, ParamKind param,
                                       std::uint64_t seed, std::uint64_t trial) {
    Rng rng(mix_seed(seed, trial, static_cast<std::uint64_t>(param) * 4 +
                                      static_cast<std::uint64_t>(problem)));
    int n = 4 + rng.range(0, 56);  // n <= 60
    double p = grid_p(trial);
    if (problem == ProblemKind::Nwt) {
        return gen_planted_nwt(n, p, -10, 10, false, param, mix_seed(seed, trial, 101));
    }
    int f = std::min(n, 3 + rng.range(0, 3));
    return gen_random_tc(n, p, f, param, mix_seed(seed, trial, 202));
}

// Runs fn(trial) for trial in [0, total) over `jobs` async chunks; results
// are merged in trial order, so the report is independent of scheduling.
template <typename F>
inline std::vector<std::string> run_indexed(int total, int jobs, F&& fn) {
    std::vector<std::string> merged;
    if (jobs <= 1) {
        for (int t = 0; t < total; ++t) {
            auto part = fn(t);
            merged.insert(merged.end(), part.begin(), part.end());
        }
        return merged;
    }
    std::vector<std::vector<std::string>> results(static_cast<std::size_t>(total));
    std::vector<std::future<void>> futures;
    for (int j = 0; j < jobs; ++j) {
        futures.push_back(std::async(std::launch::async, [&, j]() {
            for (int t = j; t < total; t += jobs) {
                results[static_cast<std::size_t>(t)] = fn(t);
            }
        }));
    }
    for (auto& f : futures) f.get();
    for (auto& part : results) merged.insert(merged.end(), part.begin(), part.end());
    return merged;
}

} // namespace detail

// One diminisher application on one seeded instance: oracle equivalence,
// halving, strictness, blow-up, copy fidelity, plus a strict-kernel check on
// the same instance.
inline std::vector<std::string> verify_diminisher_trial(ProblemKind problem, ParamKind param,
                                                        std::uint64_t seed, int trial) {
    std::vector<std::string> violations;
    auto tag = [&](const std::string& msg) {
        return to_string(problem) + "/" + to_string(param) + " trial " + std::to_string(trial) +
               ": " + msg;
    };
    Instance inst = detail::random_verify_instance(problem, param, seed,
                                                   static_cast<std::uint64_t>(trial));
    DiminisherConfig cfg = DiminisherConfig::for_instance(inst);
    DiminishOutcome out = diminish(inst, cfg);

    DiminishCheck check = verify_diminisher(inst, out, cfg);
    for (const auto& v : check.violations) violations.push_back(tag(v));

    bool oracle_answer = oracle::decide(inst);
    bool post = is_decided(out) ? decided_answer(out) : solve_per_component(reduced(out).instance);
    if (post != oracle_answer) violations.push_back(tag("post-diminisher answer differs from cubic oracle"));

    KernelOutcome ko = strict_kernel(inst, Rational{2, 1});
    if (ko.new_k > ko.old_k) violations.push_back(tag("strict kernel raised the parameter"));
    if (ko.branch == KernelBranch::Unchanged) {
        if (!pow_geq(static_cast<std::uint64_t>(inst.k), 3,
                     static_cast<std::uint64_t>(inst.graph.size()), 1)) {
            violations.push_back(tag("kernel kept an instance larger than k^3"));
        }
    } else if ((ko.branch == KernelBranch::TrivialYes) != oracle_answer) {
        violations.push_back(tag("kernel trivial branch answer differs from cubic oracle"));
    }
    return violations;
}

inline std::vector<std::string> verify_coloring_trial(std::uint64_t seed, int trial) {
    std::vector<std::string> violations;
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(trial), 7));
    int n = 2 + rng.range(0, 58);
    Graph g = gen_gnp(n, detail::grid_p(static_cast<std::uint64_t>(trial)),
                      mix_seed(seed, static_cast<std::uint64_t>(trial), 8));
    for (int b : {2, 12, 36}) {
        EdgeColoring col = greedy_edge_color(g, b);
        auto tag = [&](const std::string& msg) {
            return "coloring trial " + std::to_string(trial) + " b=" + std::to_string(b) + ": " + msg;
        };
        if (col.f > 2 * b - 1) violations.push_back(tag("more than 2b-1 colors used"));
        std::vector<int> load(static_cast<std::size_t>(n) * static_cast<std::size_t>(2 * b), 0);
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
            int c = col.color[static_cast<std::size_t>(e)];
            if (c < 1 || c > col.f) {
                violations.push_back(tag("edge color outside [1,f]"));
                break;
            }
            Edge ed = g.edge(e);
            for (Vertex v : {ed.u, ed.v}) {
                int& slot = load[static_cast<std::size_t>(v) * static_cast<std::size_t>(2 * b) +
                                 static_cast<std::size_t>(c)];
                if (++slot > col.cap) {
                    violations.push_back(tag("per-vertex per-color load exceeds ceil(maxdeg/b)"));
                }
            }
        }
    }
    return violations;
}

inline std::vector<std::string> verify_turing_trial(std::uint64_t seed, int trial) {
    std::vector<std::string> violations;
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(trial), 9));
    int n = 2 + rng.range(0, 28);
    Graph g = gen_gnp(n, detail::grid_p(static_cast<std::uint64_t>(trial)),
                      mix_seed(seed, static_cast<std::uint64_t>(trial), 10));
    const Pattern patterns[] = {pattern_clique(3), pattern_path(4), pattern_cycle(4)};
    const char* names[] = {"K3", "P4", "C4"};
    for (int i = 0; i < 3; ++i) {
        auto tag = [&](const std::string& msg) {
            return std::string("turing trial ") + std::to_string(trial) + " H=" + names[i] + ": " + msg;
        };
        auto [yes, trace] = turing_solve(g, patterns[i]);
        if (yes != solve_hsi(g, patterns[i])) {
            violations.push_back(tag("turing answer differs from whole-graph solver"));
        }
        if (trace.calls.size() != static_cast<std::size_t>(n)) {
            violations.push_back(tag("expected exactly n oracle calls"));
        }
        // The order formula undercounts balls in maxdeg-2 paths/cycles, where
        // the tight bound is 2r+1; check against the larger of the two.
        int radius = patterns[i].order() / 2;
        std::uint64_t bound = std::max(turing_ball_order_bound(max_degree(g), radius),
                                       static_cast<std::uint64_t>(2 * radius + 1));
        if (trace.max_order > bound) {
            violations.push_back(tag("oracle call order " + std::to_string(trace.max_order) +
                                     " exceeds bound " + std::to_string(bound)));
        }
    }
    return violations;
}

inline std::vector<std::string> verify_interleave_case(int k0, ParamKind param, bool plant,
                                                       std::uint64_t seed) {
    std::vector<std::string> violations;
    auto tag = [&](const std::string& msg) {
        return "interleave k0=" + std::to_string(k0) + " " + to_string(param) +
               (plant ? " planted" : " unplanted") + ": " + msg;
    };
    Instance inst;
    switch (param) {
        case ParamKind::ComponentOrder: inst = planted_component_instance(k0, plant, seed); break;
        case ParamKind::MaxDegree: inst = planted_maxdeg_instance(k0, plant, seed); break;
        case ParamKind::Degeneracy: inst = planted_degeneracy_instance(k0, plant, seed); break;
    }
    DiminisherConfig cfg = DiminisherConfig::for_instance(inst);
    auto [answer, trace] = interleave_solve(inst, Rational{2, 1}, cfg);
    if (answer != oracle::decide(inst)) violations.push_back(tag("answer differs from cubic oracle"));
    if (plant && !answer) violations.push_back(tag("planted yes-instance answered no"));
    int bound = static_cast<int>(std::ceil(std::log2(std::max(k0, 2)))) + 1;
    if (trace.reduced_rounds > bound) {
        violations.push_back(tag("reduced rounds " + std::to_string(trace.reduced_rounds) +
                                 " exceed ceil(log2 k0)+1 = " + std::to_string(bound)));
    }
    int prev = trace.rounds.empty() ? 0 : trace.rounds.front().k_before;
    for (const auto& row : trace.rounds) {
        if (row.k_before > prev || row.k_after > row.k_before) {
            violations.push_back(tag("parameter increased along the trace"));
            break;
        }
        prev = row.k_after;
    }
    if (trace.rounds.empty() || trace.rounds.back().action != InterleaveAction::Decide) {
        violations.push_back(tag("trace does not end in a decide action"));
    }
    return violations;
}

inline VerifyReport run_verify(const VerifyOptions& opts, std::ostream* log = nullptr) {
    VerifyReport report;
    auto section = [&](const std::string& name, std::vector<std::string> violations,
                       std::size_t checks) {
        report.checks += checks;
        if (log) {
            *log << (violations.empty() ? "ok   " : "FAIL ") << name << " (" << checks
                 << " checks, " << violations.size() << " violations)\n";
        }
        report.violations.insert(report.violations.end(), violations.begin(), violations.end());
    };

    const ProblemKind problems[] = {ProblemKind::Nwt, ProblemKind::Tc};
    const ParamKind params[] = {ParamKind::ComponentOrder, ParamKind::MaxDegree,
                                ParamKind::Degeneracy};
    for (ProblemKind problem : problems) {
        for (ParamKind param : params) {
            auto violations = detail::run_indexed(opts.trials, opts.jobs, [&](int t) {
                return verify_diminisher_trial(problem, param, opts.seed, t);
            });
            section("diminisher " + to_string(param) + " on " + to_string(problem),
                    std::move(violations), static_cast<std::size_t>(opts.trials));
        }
    }
    section("edge coloring invariants",
            detail::run_indexed(opts.trials, opts.jobs,
                                [&](int t) { return verify_coloring_trial(opts.seed, t); }),
            static_cast<std::size_t>(opts.trials) * 3);
    {
        int turing_trials = std::max(1, opts.trials / 3);
        section("turing kernel agreement",
                detail::run_indexed(turing_trials, opts.jobs,
                                    [&](int t) { return verify_turing_trial(opts.seed, t); }),
                static_cast<std::size_t>(turing_trials) * 3);
    }
    {
        std::vector<std::string> violations;
        std::size_t cases = 0;
        for (int k0 : {16, 32}) {
            for (ParamKind param : params) {
                for (bool plant : {true, false}) {
                    auto part = verify_interleave_case(k0, param, plant,
                                                       mix_seed(opts.seed, cases, 33));
                    violations.insert(violations.end(), part.begin(), part.end());
                    ++cases;
                }
            }
        }
        section("interleave round bound", std::move(violations), cases);
    }
    return report;
}

} // namespace kdim
