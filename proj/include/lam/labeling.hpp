#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lam/graph.hpp"

namespace lam {

// Bijection edge-index -> [1,q] with cached induced vertex sums f+.
struct EdgeLabeling {
    std::vector<long long> labels;
    std::vector<long long> induced_sum;
};

// Validates bijectivity and computes the sums.
EdgeLabeling make_labeling(const Graph& g, std::vector<long long> labels);

struct VerificationReport {
    bool is_bijection = false;
    bool is_proper = false;
    std::vector<long long> colors;  // distinct induced sums, ascending
    int color_count = 0;
    std::vector<std::pair<int, int>> violations;  // adjacent pairs with equal sums
};

// Recomputes sums from scratch (no reliance on the cached field).
VerificationReport verify(const Graph& g, const EdgeLabeling& f);

// g = q + 1 - f (Lemma on regular graphs: color count preserved).
EdgeLabeling complement(const Graph& g, const EdgeLabeling& f);

struct DeletionOutcome {
    Graph graph;  // G - e
    EdgeLabeling labeling;
    VerificationReport report;
    bool construction_failed = false;
};

// Extreme-edge deletion: requires g regular, f proper, f(e) in {1, q}.
// Tries the four natural candidates (restrict-or-shift of f and of its
// complement, plus the [1,q-1]-complement of each) and returns the proper
// one with fewest colors; construction_failed is set when none verifies.
DeletionOutcome delete_extreme_edge(const Graph& g, const EdgeLabeling& f, int edge);

// Symmetric p x p matrix, entry f(u_l u_l') at adjacent pairs, 0 = sentinel.
struct LabelingMatrix {
    int p = 0;
    std::vector<std::vector<long long>> entries;
};

LabelingMatrix to_matrix(const Graph& g, const EdgeLabeling& f);
std::pair<Graph, EdgeLabeling> from_matrix(const LabelingMatrix& m);

struct TwoColorCertificate {
    long long x = 0, y = 0;        // x < y
    std::vector<int> X, Y;         // color classes; |X| > |Y|
};

// Present exactly when c(f) = 2; asserts x|X| = y|Y| = q(q+1)/2, |X| > |Y|
// and that (X,Y) is a bipartition; throws "internal-invariant" otherwise.
std::optional<TwoColorCertificate> two_coloring_certificate(const Graph& g,
                                                            const EdgeLabeling& f);

enum class Chi2Status { unknown, fail };

struct Chi2Decision {
    Chi2Status status;
    std::string reason;  // which necessary condition failed
};

// Necessary conditions for chi_la = 2 on a connected graph.
Chi2Decision chi_la2_feasible(const Graph& g);

// True when some component is a single edge (chi_la undefined there).
bool has_k2_component(const Graph& g);

}  // namespace lam
