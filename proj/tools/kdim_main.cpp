// Command-line front end: solve/diminish/interleave/turing on GKF instance
// files, plus instance generation, parameter stats and the verification
// suite. Exit codes: 0 ok/decided, 1 usage error, 2 parse error,
// 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kdim/kdim.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kdim::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw kdim::Error("cannot write '" + path + "'");
    out << content;
}

kdim::Instance load_instance(const std::string& path, const std::string& param_flag) {
    kdim::Instance inst = kdim::parse_gkf(read_file(path));
    if (!param_flag.empty()) {
        kdim::ParamKind param = kdim::parse_param_kind(param_flag);
        if (param != inst.param) {
            inst = kdim::make_instance(inst.graph, inst.problem, param, inst.pattern);
        }
    }
    return inst;
}

kdim::EdgeBudget parse_budget(const std::string& s) {
    if (s == "paper") return kdim::EdgeBudget::OrderSquared;
    if (s == "exact") return kdim::EdgeBudget::ExactEdges;
    throw kdim::Error("unknown edge budget '" + s + "' (expected paper|exact)");
}

bool solve_instance(const kdim::Instance& inst) {
    switch (inst.problem) {
        case kdim::ProblemKind::Nwt: return kdim::solve_nwt(inst.graph).found;
        case kdim::ProblemKind::Tc: return kdim::solve_tc(inst.graph).covered_all;
        case kdim::ProblemKind::Hsi: return kdim::solve_hsi(inst.graph, *inst.pattern);
    }
    return false;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"parameter diminishers and strict kernels for triangle-finding problems"};
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path;
    std::string csv_path;
    std::string provenance_path;
    std::string param_flag;
    std::string eps_flag = "2";
    std::string budget_flag = "exact";
    bool no_timing = false;
    int diminish_rounds = 1;
    int interleave_round_cap = 0;

    auto* solve = app.add_subcommand("solve", "decide an instance, print yes/no");
    solve->add_option("file", in_path, "GKF instance file")->required();
    solve->add_option("--param", param_flag, "override the tracked parameter");

    auto* stats = app.add_subcommand("stats", "print n, m and the three parameter values");
    stats->add_option("file", in_path, "GKF instance file")->required();

    auto* diminish = app.add_subcommand("diminish", "apply the parameter diminisher");
    diminish->add_option("file", in_path, "GKF instance file")->required();
    diminish->add_option("--param", param_flag, "parameter: component|maxdeg|degeneracy");
    diminish->add_option("--edge-budget", budget_flag, "paper|exact (default exact)");
    diminish->add_option("--rounds", diminish_rounds, "apply up to this many rounds (default 1)");
    diminish->add_option("--out", out_path, "write the reduced instance here");
    diminish->add_option("--provenance", provenance_path, "write a provenance sidecar here");

    auto* interleave = app.add_subcommand("interleave", "kernel/diminisher loop, print yes/no");
    interleave->add_option("file", in_path, "GKF instance file")->required();
    interleave->add_option("--param", param_flag, "override the tracked parameter");
    interleave->add_option("--eps", eps_flag, "kernel exponent (default 2)");
    interleave->add_option("--edge-budget", budget_flag, "paper|exact (default exact)");
    interleave->add_option("--rounds", rounds, "cap on diminisher rounds (0 = no cap)");
    interleave->add_option("--csv", csv_path, "write the per-round trace as CSV");
    interleave->add_flag("--no-timing", no_timing, "zero the ms column for reproducible CSV");

    auto* turing = app.add_subcommand("turing", "ball-oracle solver for hsi, print yes/no");
    turing->add_option("file", in_path, "GKF instance file")->required();

    std::uint64_t seed = 1;
    int trials = 300;
    int jobs = 1;
    auto* verify = app.add_subcommand("verify", "run the seeded property suite");
    verify->add_option("--seed", seed, "base seed (default 1)");
    verify->add_option("--trials", trials, "trials per diminisher/problem (default 300)");
    verify->add_option("--jobs", jobs, "worker threads (default 1)");

    std::string model;
    int gen_n = 20;
    std::uint64_t gen_m = 0;
    double gen_p = 0.2;
    int gen_f = 3;
    int wmin = -10;
    int wmax = 10;
    int hubs = 2;
    bool plant = false;
    std::string pattern_flag = "k3";
    auto* generate = app.add_subcommand("generate", "write a seeded random instance");
    generate->add_option("--model", model, "gnp|gnm|planted-nwt|random-tc|hard-ball")->required();
    generate->add_option("--n", gen_n, "vertex count");
    generate->add_option("--m", gen_m, "edge count (gnm)");
    generate->add_option("--p", gen_p, "edge probability (default 0.2)");
    generate->add_option("--f", gen_f, "number of colors (random-tc)");
    generate->add_option("--wmin", wmin, "minimum weight (planted-nwt)");
    generate->add_option("--wmax", wmax, "maximum weight (planted-nwt)");
    generate->add_flag("--plant", plant, "plant a negative triangle (planted-nwt)");
    generate->add_option("--hubs", hubs, "hub count (hard-ball)");
    generate->add_option("--pattern", pattern_flag, "k3|p4|c4 (hsi models)");
    generate->add_option("--param", param_flag, "tracked parameter (default component)");
    generate->add_option("--seed", seed, "seed (default 1)");
    generate->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed()) {
            kdim::Instance inst = load_instance(in_path, param_flag);
            std::cout << (solve_instance(inst) ? "yes" : "no") << "\n";
            return 0;
        }
        if (stats->parsed()) {
            kdim::Instance inst = load_instance(in_path, "");
            const kdim::Graph& g = inst.graph;
            std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count()
                      << " component=" << kdim::largest_component_order(g)
                      << " maxdeg=" << kdim::max_degree(g)
                      << " degeneracy=" << kdim::degeneracy(g) << "\n";
            return 0;
        }
        if (diminish->parsed()) {
            kdim::Instance inst = load_instance(in_path, param_flag);
            kdim::DiminisherConfig cfg =
                kdim::DiminisherConfig::for_instance(inst, parse_budget(budget_flag));
            kdim::ProvenanceMap prov = kdim::ProvenanceMap::identity(inst.graph);
            const kdim::Graph original = inst.graph;
            int old_k = inst.k;
            for (int r = 0; r < rounds; ++r) {
                kdim::DiminishOutcome out = kdim::diminish(inst, cfg);
                if (kdim::is_decided(out)) {
                    std::cout << "decided " << (kdim::decided_answer(out) ? "yes" : "no") << "\n";
                    return 0;
                }
                const kdim::Reduced& red = kdim::reduced(out);
                // Compose provenance so it keeps pointing at the input file.
                kdim::ProvenanceMap composed;
                composed.vertex_origin.reserve(red.provenance.vertex_origin.size());
                for (kdim::Vertex v : red.provenance.vertex_origin) {
                    composed.vertex_origin.push_back(prov.vertex_origin[static_cast<std::size_t>(v)]);
                }
                composed.edge_origin.reserve(red.provenance.edge_origin.size());
                for (kdim::EdgeIndex e : red.provenance.edge_origin) {
                    composed.edge_origin.push_back(prov.edge_origin[static_cast<std::size_t>(e)]);
                }
                prov = std::move(composed);
                inst = red.instance;
            }
            if (!out_path.empty()) write_file(out_path, kdim::write_gkf(inst));
            if (!provenance_path.empty()) {
                write_file(provenance_path, kdim::write_provenance(original, inst.graph, prov));
            }
            std::cout << "reduced " << old_k << " " << inst.k << "\n";
            return 0;
        }
        if (interleave->parsed()) {
            kdim::Instance inst = load_instance(in_path, param_flag);
            kdim::DiminisherConfig cfg =
                kdim::DiminisherConfig::for_instance(inst, parse_budget(budget_flag));
            kdim::Rational eps = kdim::Rational::parse(eps_flag);
            auto [answer, trace] = kdim::interleave_solve(inst, eps, cfg, rounds);
            if (!csv_path.empty()) {
                std::ostringstream csv;
                kdim::write_trace_csv(trace, csv, !no_timing);
                write_file(csv_path, csv.str());
            }
            std::cout << (answer ? "yes" : "no") << "\n";
            return 0;
        }
        if (turing->parsed()) {
            kdim::Instance inst = load_instance(in_path, "");
            if (inst.problem != kdim::ProblemKind::Hsi) {
                throw kdim::Error("turing requires an hsi instance");
            }
            auto [answer, trace] = kdim::turing_solve(inst.graph, *inst.pattern);
            (void)trace;
            std::cout << (answer ? "yes" : "no") << "\n";
            return 0;
        }
        if (verify->parsed()) {
            kdim::VerifyOptions opts;
            opts.seed = seed;
            opts.trials = trials;
            opts.jobs = jobs;
            kdim::VerifyReport report = kdim::run_verify(opts, &std::cout);
            std::cout << report.checks << " checks, " << report.violations.size()
                      << " violations\n";
            for (std::size_t i = 0; i < report.violations.size() && i < 25; ++i) {
                std::cerr << "violation: " << report.violations[i] << "\n";
            }
            return report.ok() ? 0 : 3;
        }
        if (generate->parsed()) {
            kdim::ParamKind param = param_flag.empty() ? kdim::ParamKind::ComponentOrder
                                                       : kdim::parse_param_kind(param_flag);
            auto pattern_of = [&]() -> kdim::Pattern {
                if (pattern_flag == "k3") return kdim::pattern_clique(3);
                if (pattern_flag == "p4") return kdim::pattern_path(4);
                if (pattern_flag == "c4") return kdim::pattern_cycle(4);
                throw kdim::Error("unknown pattern '" + pattern_flag + "' (expected k3|p4|c4)");
            };
            kdim::Instance inst;
            if (model == "gnp") {
                inst = kdim::gen_gnp_hsi(gen_n, gen_p, pattern_of(), param, seed);
            } else if (model == "gnm") {
                inst = kdim::make_instance(kdim::gen_gnm(gen_n, gen_m, seed),
                                           kdim::ProblemKind::Hsi, param, pattern_of());
            } else if (model == "planted-nwt") {
                inst = kdim::gen_planted_nwt(gen_n, gen_p, wmin, wmax, plant, param, seed);
            } else if (model == "random-tc") {
                inst = kdim::gen_random_tc(gen_n, gen_p, gen_f, param, seed);
            } else if (model == "hard-ball") {
                inst = kdim::gen_hard_ball(gen_n, hubs, pattern_of(), param, seed);
            } else {
                throw kdim::Error("unknown model '" + model + "'");
            }
            std::string text = kdim::write_gkf(inst);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                write_file(out_path, text);
            }
            return 0;
        }
    } catch (const kdim::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const kdim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
