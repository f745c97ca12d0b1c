#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lam/solver.hpp"
#include "lam/theorem_suite.hpp"

using namespace lam;

TEST_CASE("exact solver against reference values") {
    struct Row {
        Graph g;
        int expected;
    };
    std::vector<Row> rows{
        {cycle(3), 3},
        {cycle(4), 3},
        {cycle(5), 3},
        {complete_bipartite(2, 2), 3},
        {bowtie(), 3},
        {complete_bipartite(1, 3), 4},  // every bijection colors the leaves distinctly
    };
    for (const auto& row : rows) {
        SolveResult r = chi_la_exact(row.g);
        REQUIRE(r.status == SolveStatus::exact);
        CHECK(*r.chi_la == row.expected);
        VerificationReport rep = verify(row.g, *r.witness);
        CHECK(rep.is_proper);
        CHECK(rep.color_count == row.expected);
    }
}

TEST_CASE("pruned solver agrees with the naive oracle at q <= 8") {
    for (const Graph& g : {cycle(3), cycle(4), cycle(5), cycle(6),
                           complete_bipartite(2, 2), complete_bipartite(1, 3),
                           bowtie(), complete(4), wheel(3)}) {
        SolveResult fast = chi_la_exact(g);
        SolveResult naive = chi_la_naive(g);
        REQUIRE(fast.status == SolveStatus::exact);
        REQUIRE(naive.status == SolveStatus::exact);
        CHECK(*fast.chi_la == *naive.chi_la);
    }
}

TEST_CASE("K2 components make chi_la undefined") {
    CHECK(chi_la_exact(complete(2)).status == SolveStatus::undefined_no_labeling);
    CHECK(chi_la_naive(complete(2)).status == SolveStatus::undefined_no_labeling);
    Graph mixed(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(chi_la_exact(mixed).status == SolveStatus::undefined_no_labeling);
}

TEST_CASE("isolated vertices are rejected") {
    Graph g(3, {{0, 1}});
    CHECK_THROWS_AS(chi_la_exact(g), Error);
}

TEST_CASE("budget exhaustion reports bounds only") {
    SolveResult r = chi_la_exact(cycle(8), /*budget=*/50);
    CHECK(r.status == SolveStatus::budget_exceeded);
    CHECK_FALSE(r.chi_la.has_value());
}

TEST_CASE("determinism") {
    SolveResult a = chi_la_exact(bowtie());
    SolveResult b = chi_la_exact(bowtie());
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.witness->labels == b.witness->labels);
}

TEST_CASE("bounds") {
    BoundsResult b = chi_la_bounds(cartesian_product(cycle(4), cycle(4)));
    CHECK(b.lower == 3);
    REQUIRE(b.upper.has_value());
    CHECK(*b.upper == 3);

    BoundsResult lex = chi_la_bounds(lex_product(cycle(4), null_graph(3)));
    CHECK(lex.lower == 3);
    REQUIRE(lex.upper.has_value());
    CHECK(*lex.upper == 3);

    BoundsResult two = chi_la_bounds(disjoint_copies(2, cycle(4)));
    CHECK(two.lower == 3);
    REQUIRE(two.upper.has_value());
    CHECK(*two.upper == 3);
}
