#include <catch2/catch_amalgamated.hpp>

#include "kdim/generate.hpp"
#include "kdim/gkf.hpp"
#include "kdim/oracles.hpp"

using namespace kdim;

TEST_CASE("gnp edge probability extremes") {
    CHECK(gen_gnp(10, 0.0, 3).edge_count() == 0);
    CHECK(gen_gnp(10, 1.0, 3).edge_count() == 45);
    CHECK(gen_gnp(0, 0.5, 3).vertex_count() == 0);
}

TEST_CASE("gnm produces the exact edge count") {
    Graph g = gen_gnm(30, 60, 11);
    CHECK(g.edge_count() == 60);
    CHECK_THROWS_AS(gen_gnm(4, 7, 1), Error);
}

TEST_CASE("planted nwt instances are certified yes") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Instance inst = gen_planted_nwt(50, 0.1, -10, 10, true, ParamKind::ComponentOrder, seed);
        CHECK(solve_nwt(inst.graph).found);
        CHECK(oracle::nwt_cubic(inst.graph));
    }
    CHECK_THROWS_AS(gen_planted_nwt(2, 0.5, -1, 1, true, ParamKind::MaxDegree, 1), Error);
    CHECK_THROWS_AS(gen_planted_nwt(5, 0.5, 3, 1, false, ParamKind::MaxDegree, 1), Error);
}

TEST_CASE("random tc colorings are surjective") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance inst = gen_random_tc(25, 0.3, 5, ParamKind::Degeneracy, seed);
        CHECK(inst.graph.coloring_surjective());
        CHECK(inst.graph.color_count() == 5);
    }
    CHECK_THROWS_AS(gen_random_tc(3, 0.5, 4, ParamKind::MaxDegree, 1), Error);
    CHECK_THROWS_AS(gen_random_tc(3, 0.5, 0, ParamKind::MaxDegree, 1), Error);
}

TEST_CASE("identical seeds give byte-identical instances") {
    for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
        Instance a = gen_planted_nwt(40, 0.2, -10, 10, true, ParamKind::MaxDegree, seed);
        Instance b = gen_planted_nwt(40, 0.2, -10, 10, true, ParamKind::MaxDegree, seed);
        CHECK(write_gkf(a) == write_gkf(b));
        Instance c = gen_random_tc(40, 0.2, 4, ParamKind::MaxDegree, seed);
        Instance d = gen_random_tc(40, 0.2, 4, ParamKind::MaxDegree, seed);
        CHECK(write_gkf(c) == write_gkf(d));
    }
}

TEST_CASE("hard-ball graphs have fat hubs") {
    Instance inst = gen_hard_ball(60, 3, pattern_clique(3), ParamKind::MaxDegree, 5);
    CHECK(inst.k >= 19);  // each hub dominates its group
    CHECK_THROWS_AS(gen_hard_ball(5, 3, pattern_clique(3), ParamKind::MaxDegree, 5), Error);
}

TEST_CASE("benchmark builders pin the parameter exactly") {
    for (int k0 : {16, 32, 64}) {
        Instance comp = planted_component_instance(k0, true, 9);
        CHECK(comp.k == k0);
        CHECK(comp.param == ParamKind::ComponentOrder);
        CHECK(solve_nwt(comp.graph).found);
        Instance comp_no = planted_component_instance(k0, false, 9);
        CHECK_FALSE(solve_nwt(comp_no.graph).found);  // all weights positive

        Instance deg = planted_maxdeg_instance(k0, true, 9);
        CHECK(deg.k == k0);
        CHECK(deg.param == ParamKind::MaxDegree);
        CHECK(solve_nwt(deg.graph).found);

        Instance degen = planted_degeneracy_instance(k0, false, 9);
        CHECK(degen.k == k0);
        CHECK(degen.param == ParamKind::Degeneracy);
        CHECK_FALSE(solve_nwt(degen.graph).found);
    }
}

TEST_CASE("rng rejection sampling stays in range") {
    Rng rng(123);
    for (int i = 0; i < 1000; ++i) {
        CHECK(rng.below(7) < 7);
        int r = rng.range(-3, 3);
        CHECK(r >= -3);
        CHECK(r <= 3);
    }
    CHECK_THROWS_AS(rng.below(0), Error);
}
