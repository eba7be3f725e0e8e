#include <catch2/catch_amalgamated.hpp>

#include "kdim/generate.hpp"
#include "kdim/gkf.hpp"

using namespace kdim;

namespace {

int error_line(const std::string& text) {
    try {
        parse_gkf(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST_CASE("minimal nwt file parses") {
    Instance inst = parse_gkf(
        "# a negative triangle\n"
        "problem nwt\n"
        "nodes 3\n"
        "edge 0 1 -1\n"
        "edge 0 2 -1\n"
        "edge 1 2 -1\n");
    CHECK(inst.problem == ProblemKind::Nwt);
    CHECK(inst.param == ParamKind::ComponentOrder);  // default
    CHECK(inst.k == 3);
    CHECK(inst.graph.edge_count() == 3);
    CHECK(inst.graph.weight(0) == -1);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(error_line("problem nwt\nnodes 2\nedge 0 1 1\nedge 1 0 2\n") == 4);  // duplicate edge
    CHECK(error_line("nodes 2\nproblem nwt\n") == 1);                          // problem not first
    CHECK(error_line("problem nwt\nedge 0 1 1\n") == 2);                       // edges before nodes
    CHECK(error_line("problem nwt\nnodes 2\nedge 0 1\n") == 3);                // missing weight
    CHECK(error_line("problem tc\nnodes 2\nedge 0 1 5\n") == 3);               // unexpected weight
    CHECK(error_line("problem nwt\nnodes 2\nedge 0 7 1\n") == 3);              // out of range
    CHECK(error_line("problem nwt\nnodes 2\nedge 0 x 1\n") == 3);              // junk token
    CHECK(error_line("problem nwt\nnodes 2\nfrobnicate\n") == 3);              // unknown keyword
    CHECK(error_line("problem tc\nnodes 2\ncolor 0 1\ncolor 0 2\n") == 4);     // duplicate color
    CHECK(error_line("problem nwt\nnodes 2\npattern 3\n") == 3);               // pattern for nwt
}

TEST_CASE("tc validation") {
    CHECK_THROWS_AS(parse_gkf("problem tc\nnodes 2\nedge 0 1\ncolor 0 1\ncolor 1 3\n"),
                    ParseError);  // not surjective
    CHECK_THROWS_AS(parse_gkf("problem tc\nnodes 2\nedge 0 1\ncolor 0 1\n"),
                    ParseError);  // vertex 1 uncolored
    Instance inst = parse_gkf(
        "problem tc\nparam maxdeg\nnodes 3\nedge 0 1\nedge 1 2\nedge 0 2\n"
        "color 0 1\ncolor 1 2\ncolor 2 3\n");
    CHECK(inst.param == ParamKind::MaxDegree);
    CHECK(inst.k == 2);
}

TEST_CASE("hsi pattern section") {
    Instance inst = parse_gkf(
        "problem hsi\nnodes 4\nedge 0 1\nedge 1 2\nedge 2 3\nedge 0 3\n"
        "pattern 3\nedge 0 1\nedge 1 2\nedge 0 2\n");
    REQUIRE(inst.pattern.has_value());
    CHECK(inst.pattern->order() == 3);
    CHECK(inst.pattern->pattern_edge_count() == 3);
    CHECK_THROWS_AS(parse_gkf("problem hsi\nnodes 2\nedge 0 1\n"), ParseError);  // no pattern
    CHECK_THROWS_AS(parse_gkf("problem hsi\nnodes 2\nedge 0 1\npattern 3\nedge 0 1\n"),
                    ParseError);  // disconnected pattern
}

TEST_CASE("round trip identity on random instances") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        int pick = static_cast<int>(seed % 3);
        Instance inst;
        if (pick == 0) {
            inst = gen_planted_nwt(3 + rng.range(0, 27), 0.3, -10, 10, seed % 2 == 0,
                                   ParamKind::MaxDegree, mix_seed(51, seed));
        } else if (pick == 1) {
            int n = 4 + rng.range(0, 26);
            inst = gen_random_tc(n, 0.3, std::min(n, 4), ParamKind::Degeneracy,
                                 mix_seed(52, seed));
        } else {
            inst = gen_gnp_hsi(3 + rng.range(0, 27), 0.3, pattern_path(4),
                               ParamKind::ComponentOrder, mix_seed(53, seed));
        }
        std::string text = write_gkf(inst);
        Instance back = parse_gkf(text);
        CHECK(back.problem == inst.problem);
        CHECK(back.param == inst.param);
        CHECK(back.k == inst.k);
        CHECK(write_gkf(back) == text);  // canonical form is a fixed point
    }
}

TEST_CASE("writer output is canonical regardless of edge order") {
    Graph a(3, {{0, 1}, {1, 2}}, std::vector<std::int64_t>{5, 7});
    Graph b(3, {{1, 2}, {0, 1}}, std::vector<std::int64_t>{7, 5});
    Instance ia = make_instance(a, ProblemKind::Nwt, ParamKind::ComponentOrder);
    Instance ib = make_instance(b, ProblemKind::Nwt, ParamKind::ComponentOrder);
    CHECK(write_gkf(ia) == write_gkf(ib));
}

TEST_CASE("provenance sidecar format") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}}, std::vector<std::int64_t>{1, 2, 3});
    auto [sub, prov] = induced_subgraph(g, {1, 2, 3});
    std::string text = write_provenance(g, sub, prov);
    CHECK(text ==
          "v 0 1\n"
          "v 1 2\n"
          "v 2 3\n"
          "e 0 1 1 2\n"
          "e 1 2 2 3\n");
}
