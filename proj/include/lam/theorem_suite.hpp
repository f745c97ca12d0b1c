#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lam/constructions.hpp"
#include "lam/graph.hpp"
#include "lam/labeling.hpp"

namespace lam {

struct CaseResult {
    bool pass = false;
    std::string detail;
};

// Desk-scale replication of one claim; the suite doubles as the
// acceptance-criteria runner (criterion groups 1..10).
struct TheoremCase {
    std::string id;
    int criterion = 0;
    std::string description;
    std::function<CaseResult()> run;
};

std::vector<TheoremCase> theorem_suite();

// Shared fixtures.
Graph bowtie();                       // two triangles sharing the hub
TripartiteParts bowtie_parts();
Graph c5_tripartite();                // 5-cycle w,u1,v2,u2,v1
TripartiteParts c5_tripartite_parts();
EdgeLabeling paper_c4_labeling();     // the worked example's labeling of C4

}  // namespace lam
