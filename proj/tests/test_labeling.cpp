#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lam/constructions.hpp"
#include "lam/io.hpp"
#include "lam/labeling.hpp"

using namespace lam;

TEST_CASE("verify the worked-example C4 labeling") {
    Graph g = cycle(4);
    // cycle order (1,2,3,4) -> canonical (0,1)=1, (0,3)=4, (1,2)=2, (2,3)=3
    EdgeLabeling f = make_labeling(g, {1, 4, 2, 3});
    VerificationReport r = verify(g, f);
    CHECK(r.is_bijection);
    CHECK(r.is_proper);
    CHECK(r.colors == std::vector<long long>{3, 5, 7});
    CHECK(r.color_count == 3);
}

TEST_CASE("verify C3 and the forced K2 violation") {
    Graph c3 = cycle(3);
    EdgeLabeling f = make_labeling(c3, {1, 2, 3});
    VerificationReport r = verify(c3, f);
    CHECK(r.is_proper);
    CHECK(r.color_count == 3);

    Graph k2 = complete(2);
    VerificationReport rk = verify(k2, make_labeling(k2, {1}));
    CHECK_FALSE(rk.is_proper);
    CHECK(rk.violations.size() == 1);
    CHECK(has_k2_component(k2));

    CHECK_THROWS_AS(verify(c3, EdgeLabeling{{1, 2}, {}}), Error);
    CHECK_THROWS_AS(make_labeling(c3, {1, 1, 2}), Error);
}

TEST_CASE("complement") {
    Graph g = cycle(4);
    EdgeLabeling f = make_labeling(g, {1, 4, 2, 3});
    EdgeLabeling c = complement(g, f);
    CHECK(c.labels == std::vector<long long>{4, 1, 3, 2});
    CHECK(verify(g, c).colors == std::vector<long long>{3, 5, 7});
    CHECK(verify(g, c).color_count == verify(g, f).color_count);
    CHECK(complement(g, c).labels == f.labels);

    Graph c5 = cycle(5);
    EdgeLabeling f5 = cycle_labeling(5);
    CHECK(verify(c5, complement(c5, f5)).color_count == 3);
}

TEST_CASE("delete_extreme_edge on C4") {
    Graph g = cycle(4);
    EdgeLabeling f = cycle_labeling(4);
    int e_top = -1, e_mid = -1;
    for (int e = 0; e < 4; ++e) {
        if (f.labels[e] == 4) e_top = e;
        if (f.labels[e] == 3) e_mid = e;
    }
    DeletionOutcome out = delete_extreme_edge(g, f, e_top);
    CHECK_FALSE(out.construction_failed);
    CHECK(out.report.is_proper);
    CHECK(out.report.color_count == 3);
    CHECK(out.graph.q() == 3);

    CHECK_THROWS_AS(delete_extreme_edge(g, f, e_mid), Error);
}

TEST_CASE("delete_extreme_edge on C6") {
    Graph g = cycle(6);
    EdgeLabeling f = cycle_labeling(6);
    int e_top = -1;
    for (int e = 0; e < 6; ++e)
        if (f.labels[e] == 6) e_top = e;
    DeletionOutcome out = delete_extreme_edge(g, f, e_top);
    CHECK_FALSE(out.construction_failed);
    CHECK(out.report.is_proper);
    CHECK(out.report.color_count <= 3);
}

TEST_CASE("labeling matrix round trip and the 4x4 reference") {
    Graph g = cycle(4);
    EdgeLabeling f = make_labeling(g, {1, 4, 2, 3});
    LabelingMatrix m = to_matrix(g, f);
    CHECK(matrix_to_text(m) ==
          "* 1 * 4\n"
          "1 * 2 *\n"
          "* 2 * 3\n"
          "4 * 3 *\n");
    auto [g2, f2] = from_matrix(m);
    CHECK(g2 == g);
    CHECK(f2.labels == f.labels);

    LabelingMatrix bad = m;
    bad.entries[0][1] = bad.entries[1][0] = 4;  // duplicate label
    CHECK_THROWS_AS(from_matrix(bad), Error);
    LabelingMatrix asym = m;
    asym.entries[0][1] = 2;
    CHECK_THROWS_AS(from_matrix(asym), Error);
}

TEST_CASE("matrix text round trips byte-exactly") {
    Graph g = g_mn(2, 2);
    EdgeLabeling f = bipartite_regular_labeling(g);
    std::string text = matrix_to_text(to_matrix(g, f));
    LabelingMatrix parsed = matrix_from_text(text);
    CHECK(matrix_to_text(parsed) == text);
}

TEST_CASE("two-coloring certificate") {
    Graph star = complete_bipartite(1, 3);
    EdgeLabeling f = make_labeling(star, {1, 2, 3});
    CHECK_FALSE(two_coloring_certificate(star, f).has_value());  // c = 4

    Graph k2 = complete(2);
    CHECK_THROWS_AS(two_coloring_certificate(k2, make_labeling(k2, {1})), Error);
}

TEST_CASE("chi_la2 necessary conditions") {
    Chi2Decision d = chi_la2_feasible(complete_bipartite(2, 2));
    CHECK(d.status == Chi2Status::fail);
    CHECK(d.reason == "equal partite sets");

    CHECK(chi_la2_feasible(cycle(5)).status == Chi2Status::fail);
    CHECK(chi_la2_feasible(cycle(5)).reason == "non-bipartite");

    CHECK(chi_la2_feasible(complete_bipartite(1, 3)).status == Chi2Status::unknown);

    CHECK_THROWS_AS(chi_la2_feasible(disjoint_copies(2, cycle(4))), Error);
}

TEST_CASE("sum identity holds for constructed labelings") {
    for (int n : {3, 4, 7, 12}) {
        Graph g = cycle(n);
        EdgeLabeling f = cycle_labeling(n);
        long long total = 0;
        for (long long s : f.induced_sum) total += s;
        CHECK(total == static_cast<long long>(n) * (n + 1));
    }
}
