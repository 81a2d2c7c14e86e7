#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treeforce/finite_graph.hpp"

using namespace tf;

TEST_CASE("g0 restriction at depth 2 matches the frozen edge list") {
    FiniteGraph f = restrict_graph(GraphSpec::g0(), 2);
    // s_0 gives (00,10),(01,11); s_1 = "0" gives (00,01).
    std::vector<kernels::Edge> expect{{0b00, 0b01}, {0b00, 0b10}, {0b01, 0b11}};
    CHECK(f.edges() == expect);
}

TEST_CASE("g0 restrictions are spanning trees") {
    for (std::size_t n = 1; n <= 12; ++n) {
        FiniteGraph f = restrict_graph(GraphSpec::g0(), n);
        CHECK(f.edge_count() == (std::size_t{1} << n) - 1);
        CHECK(f.is_acyclic());
        CHECK(f.is_connected());
    }
    FiniteGraph trivial = restrict_graph(GraphSpec::g0(), 0);
    CHECK(trivial.vertex_count() == 1);
    CHECK(trivial.edge_count() == 0);
}

TEST_CASE("g1 restriction is the hypercube") {
    FiniteGraph f = restrict_graph(GraphSpec::g1(), 3);
    CHECK(f.edge_count() == 12);
    auto parts = f.bipartition();
    REQUIRE(parts.has_value());
    for (std::size_t n = 1; n <= 8; ++n) {
        FiniteGraph h = restrict_graph(GraphSpec::g1(), n);
        CHECK(h.edge_count() == n * (std::size_t{1} << (n - 1)));
        CHECK(h.bipartition().has_value());
    }
}

TEST_CASE("e0 restriction is complete") {
    FiniteGraph f = restrict_graph(GraphSpec::e0(), 3);
    CHECK(f.edge_count() == 8 * 7 / 2);
}

TEST_CASE("chromatic numbers") {
    CHECK(chromatic_number(restrict_graph(GraphSpec::g1(), 4)).chi == 2);
    CHECK(chromatic_number(restrict_graph(GraphSpec::g0(), 5)).chi == 2);
    CHECK(chromatic_number(FiniteGraph(3, {})).chi == 1);  // edgeless on 2^3
    CHECK(chromatic_number(restrict_graph(GraphSpec::e0(), 2)).chi == 4);  // K_4
    // Odd cycle inside a box graph: chi = 3.
    FiniteGraph c5(3, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto res = chromatic_number(c5);
    CHECK(res.chi == 3);
    CHECK(verify_coloring(c5, res.coloring) == -1);
}

TEST_CASE("chromatic witness is deterministic and verified") {
    FiniteGraph f = restrict_graph(GraphSpec::g1(), 5);
    auto a = chromatic_number(f);
    auto b = chromatic_number(f);
    CHECK(a.chi == b.chi);
    CHECK(a.coloring == b.coloring);
    CHECK(verify_coloring(f, a.coloring) == -1);
    // Breaking the coloring is detected.
    auto bad = a.coloring;
    bad[f.edges().front().second] = bad[f.edges().front().first];
    CHECK(verify_coloring(f, bad) != -1);
}

TEST_CASE("chromatic budget error carries bounds") {
    // An odd 9-cycle: the clique bound stays at 2 while chi = 3, so the
    // 2-colorability search runs and trips a tiny node budget.
    std::vector<kernels::Edge> cycle;
    for (std::uint32_t v = 0; v < 9; ++v) cycle.push_back({v, (v + 1) % 9});
    FiniteGraph f(4, cycle);
    try {
        chromatic_number(f, {5});
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.lower >= 2);
        CHECK(e.upper >= e.lower);
    }
    CHECK(chromatic_number(f).chi == 3);
}

TEST_CASE("boxes restriction") {
    ClopenGraph g(2, {{Word::parse("00"), Word::parse("11")}});
    FiniteGraph f = restrict_graph(GraphSpec::boxes(g), 3);
    CHECK(f.edge_count() == 4);  // [00] x [11] at depth 3
    CHECK_THROWS_AS(restrict_graph(GraphSpec::boxes(g), 1), PreconditionError);
}

TEST_CASE("dot export labels vertices with words") {
    FiniteGraph f = restrict_graph(GraphSpec::g1(), 2);
    std::string dot = f.to_dot();
    CHECK(dot.find("label=\"01\"") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
}
