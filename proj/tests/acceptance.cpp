// Acceptance suite: runs every theorem-suite case, aggregates per criterion,
// and prints one pass/fail line per criterion.

#include <chrono>
#include <iostream>
#include <map>
#include <vector>

#include "lam/theorem_suite.hpp"

int main() {
    static const std::map<int, const char*> kCriteria{
        {1, "magic squares, orders 3..16, reference order-3 square"},
        {2, "worked-example 12x12 matrix byte-exact, colors {57,111,165}"},
        {3, "cycle labeling pattern for n in [3,200]"},
        {4, "even-regular bipartite labelings, 3 colors, first edge q"},
        {5, "extreme-edge deletion of the label-q edge"},
        {6, "tripartite labelings: bowtie {6,7,16}, 5-cycle {5,6,8}"},
        {7, "exact solver vs reference values and naive oracle"},
        {8, "two disjoint C4 copies have chi_la = 3"},
        {9, "lex condition checker, including the W4 data triple"},
        {10, "global randomized invariants (>= 1000 cases)"},
    };

    std::map<int, std::vector<std::string>> failures;
    for (const auto& c : lam::theorem_suite()) {
        lam::CaseResult r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        if (!r.pass) failures[c.criterion].push_back(c.id + ": " + r.detail);
    }

    int failed = 0;
    for (const auto& [crit, name] : kCriteria) {
        auto it = failures.find(crit);
        if (it == failures.end()) {
            std::cout << "PASS criterion " << crit << ": " << name << "\n";
        } else {
            ++failed;
            std::cout << "FAIL criterion " << crit << ": " << name << "\n";
            for (const auto& f : it->second) std::cout << "       " << f << "\n";
        }
    }
    std::cout << (10 - failed) << "/10 criteria passed\n";
    return failed == 0 ? 0 : 1;
}
