#include <catch2/catch_amalgamated.hpp>

#include "kdim/edge_coloring.hpp"
#include "kdim/generate.hpp"

using namespace kdim;

TEST_CASE("greedy coloring of a three-edge path with b=2") {
    // maxdeg 2, cap ceil(2/2)=1: colors must alternate 1,2,1
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    EdgeColoring col = greedy_edge_color(g, 2);
    CHECK(col.cap == 1);
    CHECK(col.color == std::vector<int>{1, 2, 1});
    CHECK(col.f == 2);
    CHECK(col.f <= 2 * 2 - 1);
}

TEST_CASE("single edge gets color 1 for any b") {
    for (int b : {1, 2, 7, 36}) {
        EdgeColoring col = greedy_edge_color(Graph(2, {{0, 1}}), b);
        CHECK(col.color == std::vector<int>{1});
        CHECK(col.f == 1);
    }
}

TEST_CASE("edgeless graphs use no colors") {
    EdgeColoring col = greedy_edge_color(Graph(5, {}), 12);
    CHECK(col.f == 0);
    CHECK(col.cap == 0);
}

TEST_CASE("b must be positive") {
    CHECK_THROWS_AS(greedy_edge_color(Graph(2, {{0, 1}}), 0), Error);
}

TEST_CASE("coloring invariants on random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        int n = 2 + rng.range(0, 48);
        Graph g = gen_gnp(n, 0.05 + 0.05 * static_cast<double>(seed % 14), mix_seed(7, seed));
        int maxdeg = max_degree(g);
        for (int b : {2, 12, 36}) {
            EdgeColoring col = greedy_edge_color(g, b);
            CHECK(col.f <= 2 * b - 1);
            if (b == 12) CHECK(col.f <= 23);
            CHECK(col.cap == (maxdeg + b - 1) / b);
            // independent load recount; colors partition the edge set
            std::vector<std::vector<int>> load(static_cast<std::size_t>(n),
                                               std::vector<int>(static_cast<std::size_t>(col.f) + 1, 0));
            for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
                int c = col.color[static_cast<std::size_t>(e)];
                REQUIRE(c >= 1);
                REQUIRE(c <= col.f);
                Edge ed = g.edge(e);
                ++load[static_cast<std::size_t>(ed.u)][static_cast<std::size_t>(c)];
                ++load[static_cast<std::size_t>(ed.v)][static_cast<std::size_t>(c)];
            }
            for (Vertex v = 0; v < n; ++v) {
                for (int c = 1; c <= col.f; ++c) {
                    CHECK(load[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] <= col.cap);
                }
            }
        }
    }
}
