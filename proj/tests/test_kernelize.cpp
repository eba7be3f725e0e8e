#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "kdim/generate.hpp"
#include "kdim/kernelize.hpp"
#include "kdim/oracles.hpp"

using namespace kdim;

namespace {

// Disjoint union of weighted paths: `count` copies of P_len plus one P_rest.
Instance nwt_paths(int count, int len, int rest) {
    std::vector<Edge> edges;
    std::vector<std::int64_t> weights;
    int base = 0;
    auto add_path = [&](int l) {
        for (int v = 0; v + 1 < l; ++v) {
            edges.push_back({base + v, base + v + 1});
            weights.push_back(1);
        }
        base += l;
    };
    for (int i = 0; i < count; ++i) add_path(len);
    if (rest > 0) add_path(rest);
    return make_instance(Graph(base, std::move(edges), std::move(weights)), ProblemKind::Nwt,
                         ParamKind::ComponentOrder);
}

} // namespace

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("2").num == 2);
    CHECK(Rational::parse("2").den == 1);
    CHECK(Rational::parse("5/3").num == 5);
    CHECK(Rational::parse("0.5").num == 1);
    CHECK(Rational::parse("0.5").den == 2);
    CHECK_THROWS_AS(Rational::parse("0"), Error);
    CHECK_THROWS_AS(Rational::parse("-1"), Error);
    CHECK_THROWS_AS(Rational::parse("x"), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
}

TEST_CASE("exact power comparison") {
    CHECK(pow_geq(11, 3, 1000, 1));   // 1331 >= 1000
    CHECK_FALSE(pow_geq(5, 3, 1000, 1));
    CHECK(pow_geq(10, 3, 1000, 1));   // equality counts
    CHECK(pow_geq(0, 3, 0, 1));
    CHECK_FALSE(pow_geq(0, 3, 1, 1));
    CHECK(pow_geq(2, 60, 1000000000, 2));  // 2^60 >= 10^18
}

TEST_CASE("trivial instances solve to their advertised answers") {
    for (ParamKind param : {ParamKind::ComponentOrder, ParamKind::MaxDegree,
                            ParamKind::Degeneracy}) {
        Instance nwt_yes = trivial_instance(ProblemKind::Nwt, true, param);
        CHECK(solve_nwt(nwt_yes.graph).found);
        CHECK(nwt_yes.k <= 3);
        Instance nwt_no = trivial_instance(ProblemKind::Nwt, false, param);
        CHECK_FALSE(solve_nwt(nwt_no.graph).found);
        CHECK(nwt_no.k <= 1);
        Instance tc_yes = trivial_instance(ProblemKind::Tc, true, param);
        CHECK(solve_tc(tc_yes.graph).covered_all);
        CHECK(tc_yes.k <= 1);
        Instance tc_no = trivial_instance(ProblemKind::Tc, false, param);
        TcResult res = solve_tc(tc_no.graph);
        CHECK_FALSE(res.covered_all);
        CHECK(*res.missing == std::array<int, 3>{1, 2, 3});
        CHECK(tc_no.k <= 1);
    }
    Instance hsi_yes = trivial_instance(ProblemKind::Hsi, true, ParamKind::MaxDegree,
                                        pattern_cycle(4));
    CHECK(solve_hsi(hsi_yes.graph, *hsi_yes.pattern));
    Instance hsi_no = trivial_instance(ProblemKind::Hsi, false, ParamKind::MaxDegree,
                                       pattern_cycle(4));
    CHECK_FALSE(solve_hsi(hsi_no.graph, *hsi_no.pattern));
}

TEST_CASE("strict kernel threshold branches") {
    SECTION("k=11 with n+m=1000 stays unchanged under eps=2") {
        Instance inst = nwt_paths(47, 11, 7);
        REQUIRE(inst.graph.size() == 1000);
        REQUIRE(inst.k == 11);
        KernelOutcome out = strict_kernel(inst, Rational{2, 1});
        CHECK(out.branch == KernelBranch::Unchanged);
        CHECK(out.new_k == 11);
        CHECK(out.instance.graph.size() == 1000);
    }
    SECTION("k=5 with n+m=1000 is solved under eps=2") {
        Instance inst = nwt_paths(111, 5, 1);
        REQUIRE(inst.graph.size() == 1000);
        REQUIRE(inst.k == 5);
        KernelOutcome out = strict_kernel(inst, Rational{2, 1});
        CHECK(out.branch == KernelBranch::TrivialNo);
        CHECK(out.new_k <= out.old_k);
        CHECK(oracle::nwt_cubic(inst.graph) == false);
        CHECK(out.instance.graph.size() <= 6);
    }
    SECTION("solved branch answer equals the oracle on random instances") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            Instance inst = gen_planted_nwt(40, 0.3, -10, 10, false, ParamKind::Degeneracy,
                                            mix_seed(77, seed));
            KernelOutcome out = strict_kernel(inst, Rational{2, 1});
            CHECK(out.new_k <= out.old_k);
            if (out.branch == KernelBranch::Unchanged) {
                CHECK(pow_geq(static_cast<std::uint64_t>(inst.k), 3,
                              static_cast<std::uint64_t>(inst.graph.size()), 1));
            } else {
                CHECK((out.branch == KernelBranch::TrivialYes) == oracle::nwt_cubic(inst.graph));
            }
        }
    }
}

TEST_CASE("strictness holds exhaustively on graphs with at most 4 vertices") {
    const Rational eps_values[] = {Rational{2, 1}, Rational{1, 2}};
    const ParamKind params[] = {ParamKind::ComponentOrder, ParamKind::MaxDegree,
                                ParamKind::Degeneracy};
    for (int n = 0; n <= 4; ++n) {
        std::vector<Edge> all_pairs;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) all_pairs.push_back({u, v});
        }
        const int m_all = static_cast<int>(all_pairs.size());
        for (int mask = 0; mask < (1 << m_all); ++mask) {
            std::vector<Edge> edges;
            for (int i = 0; i < m_all; ++i) {
                if (mask & (1 << i)) edges.push_back(all_pairs[static_cast<std::size_t>(i)]);
            }
            const int m = static_cast<int>(edges.size());
            Graph plain(n, edges);

            // a triangle forces component order >= 3, max degree >= 2, degeneracy >= 2
            if (oracle::triangle_exists_cubic(plain)) {
                CHECK(largest_component_order(plain) >= 3);
                CHECK(max_degree(plain) >= 2);
                CHECK(degeneracy(plain) >= 2);
            }

            // NWT over all -1/+1 weight patterns
            for (int wmask = 0; wmask < (1 << m); ++wmask) {
                std::vector<std::int64_t> weights;
                for (int i = 0; i < m; ++i) weights.push_back(wmask & (1 << i) ? 1 : -1);
                Instance inst = make_instance(Graph(n, edges, weights), ProblemKind::Nwt,
                                              ParamKind::ComponentOrder);
                for (ParamKind param : params) {
                    Instance pinst = make_instance(inst.graph, ProblemKind::Nwt, param);
                    for (const Rational& eps : eps_values) {
                        KernelOutcome out = strict_kernel(pinst, eps);
                        CHECK(out.new_k <= out.old_k);
                    }
                }
            }

            // TC over all surjective colorings with f <= n
            for (int f = 1; f <= n; ++f) {
                std::vector<int> coloring(static_cast<std::size_t>(n), 1);
                std::function<void(int)> recurse = [&](int v) {
                    if (v == n) {
                        Graph colored(n, edges, std::nullopt, coloring);
                        if (!colored.coloring_surjective()) return;
                        for (ParamKind param : params) {
                            Instance inst = make_instance(colored, ProblemKind::Tc, param);
                            for (const Rational& eps : eps_values) {
                                KernelOutcome out = strict_kernel(inst, eps);
                                CHECK(out.new_k <= out.old_k);
                            }
                        }
                        return;
                    }
                    for (int c = 1; c <= f; ++c) {
                        coloring[static_cast<std::size_t>(v)] = c;
                        recurse(v + 1);
                    }
                };
                recurse(0);
            }
        }
    }
}

TEST_CASE("interleave on a planted order-64 component") {
    Instance inst = planted_component_instance(64, true, 2024);
    REQUIRE(inst.k == 64);
    DiminisherConfig cfg = DiminisherConfig::for_instance(inst);
    auto [answer, trace] = interleave_solve(inst, Rational{2, 1}, cfg);
    CHECK(answer);
    CHECK(trace.reduced_rounds <= 3);  // 64 -> <=32 -> <=16 -> <=12 triggers the floor
    CHECK(trace.reduced_rounds <= static_cast<int>(std::ceil(std::log2(64))) + 1);
    CHECK(trace.rounds.back().action == InterleaveAction::Decide);
}

TEST_CASE("interleave decides immediately below the floor") {
    Instance inst = make_instance(Graph(3, {{0, 1}, {0, 2}, {1, 2}},
                                        std::vector<std::int64_t>{1, 1, 1}),
                                  ProblemKind::Nwt, ParamKind::ComponentOrder);
    auto [answer, trace] = interleave_solve(inst, Rational{2, 1},
                                            DiminisherConfig::for_instance(inst));
    CHECK_FALSE(answer);
    CHECK(trace.reduced_rounds == 0);
    REQUIRE(trace.rounds.size() == 2);  // kernel, decide
    CHECK(trace.rounds[0].action == InterleaveAction::Kernel);
    CHECK(trace.rounds[1].action == InterleaveAction::Decide);
}

TEST_CASE("interleave equals the oracle and never raises k") {
    const ParamKind params[] = {ParamKind::ComponentOrder, ParamKind::MaxDegree,
                                ParamKind::Degeneracy};
    const ProblemKind problems[] = {ProblemKind::Nwt, ProblemKind::Tc};
    for (ProblemKind problem : problems) {
        for (ParamKind param : params) {
            for (std::uint64_t t = 0; t < 20; ++t) {
                std::uint64_t seed = mix_seed(99, t, static_cast<std::uint64_t>(param));
                Rng rng(seed);
                int n = 4 + rng.range(0, 40);
                double p = 0.05 + 0.05 * static_cast<double>(t % 12);
                Instance inst =
                    problem == ProblemKind::Nwt
                        ? gen_planted_nwt(n, p, -10, 10, false, param, mix_seed(seed, 5))
                        : gen_random_tc(n, p, std::min(n, 4), param, mix_seed(seed, 6));
                auto [answer, trace] =
                    interleave_solve(inst, Rational{2, 1}, DiminisherConfig::for_instance(inst));
                CHECK(answer == oracle::decide(inst));
                int prev = inst.k;
                for (const auto& row : trace.rounds) {
                    CHECK(row.k_before <= prev);
                    CHECK(row.k_after <= row.k_before);
                    if (row.action == InterleaveAction::Diminish) {
                        CHECK(row.k_after < row.k_before);  // strictness
                    }
                    prev = row.k_after;
                }
                CHECK(trace.rounds.back().action == InterleaveAction::Decide);
            }
        }
    }
}

TEST_CASE("empty instances stay unchanged and decide to no") {
    Instance empty_nwt = make_instance(Graph(0, {}, std::vector<std::int64_t>{}),
                                       ProblemKind::Nwt, ParamKind::ComponentOrder);
    CHECK(empty_nwt.k == 0);
    KernelOutcome ko = strict_kernel(empty_nwt, Rational{2, 1});
    CHECK(ko.branch == KernelBranch::Unchanged);  // 0^3 >= 0, so k never rises
    CHECK(ko.new_k == 0);
    auto [answer, trace] = interleave_solve(empty_nwt, Rational{2, 1},
                                            DiminisherConfig::for_instance(empty_nwt));
    CHECK_FALSE(answer);
    CHECK(trace.reduced_rounds == 0);

    Instance empty_tc = make_instance(Graph(0, {}, std::nullopt, std::vector<int>{}),
                                      ProblemKind::Tc, ParamKind::MaxDegree);
    CHECK(strict_kernel(empty_tc, Rational{2, 1}).branch == KernelBranch::Unchanged);
}

TEST_CASE("interleave handles hsi instances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst = gen_gnp_hsi(40, 0.15, pattern_path(4), ParamKind::ComponentOrder,
                                    mix_seed(1234, seed));
        auto [answer, trace] =
            interleave_solve(inst, Rational{2, 1}, DiminisherConfig::for_instance(inst));
        CHECK(answer == oracle::decide(inst));
        CHECK(trace.rounds.back().action == InterleaveAction::Decide);
    }
}

TEST_CASE("interleave trace serializes to the documented CSV schema") {
    Instance inst = planted_component_instance(16, true, 5);
    auto [answer, trace] = interleave_solve(inst, Rational{2, 1},
                                            DiminisherConfig::for_instance(inst));
    (void)answer;
    std::ostringstream a;
    std::ostringstream b;
    write_trace_csv(trace, a, false);
    write_trace_csv(trace, b, false);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("round,action,k,n,m,components,ms\n", 0) == 0);
    CHECK(a.str().find("decide") != std::string::npos);
}
