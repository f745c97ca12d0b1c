#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lam/graph.hpp"
#include "lam/labeling.hpp"

namespace lam {

enum class SolveStatus { exact, budget_exceeded, undefined_no_labeling };

struct SolveResult {
    std::optional<int> chi_la;            // set only when status == exact
    std::optional<EdgeLabeling> witness;  // best labeling found
    SolveStatus status = SolveStatus::exact;
    std::uint64_t nodes_explored = 0;
    std::optional<int> upper_bound;       // best-so-far when budget exceeded
};

// Exhaustive branch-and-bound over edge labelings in canonical edge order.
// Pruning: completed-vertex collisions, distinct-completed-sum count vs the
// incumbent, complement symmetry at the root for regular graphs, chromatic
// lower bound for early exit.
SolveResult chi_la_exact(const Graph& g, std::uint64_t budget = 100'000'000);

// Pruning-free oracle: walks every permutation of [1,q].
SolveResult chi_la_naive(const Graph& g);

struct BoundsResult {
    int lower = 1;
    std::optional<int> upper;
    std::string lower_provenance, upper_provenance;
};

// Lower bound from chi / balanced-bipartition reasoning, upper bound from
// whichever construction (or small exhaustive search) applies.
BoundsResult chi_la_bounds(const Graph& g);

}  // namespace lam
