#pragma once

#include <optional>
#include <vector>

#include "lam/graph.hpp"
#include "lam/labeling.hpp"

namespace lam {

// Label of the i-th cycle edge (1-based) in the three-color cycle labeling
// of C_n: odd positions n+1-(i+1)/2, even positions i/2. Position 1 gets n.
long long cycle_label_at(long long i, long long n);

// The three-color labeling of C_n (labels in canonical edge order of
// cycle(n)); induced sums are 2n - floor(n/2) at x_1, n at odd i != 1,
// n+1 at even i.
EdgeLabeling cycle_labeling(int n);

// Induced sum at every copy (u, x_j) of u in G[O_n] under the block labeling.
long long lex_color_value(long long fplus, int deg, long long n);

// Block labeling of G[O_n]: product edge {(u_l,x_j),(u_l',x_j')}, l < l',
// gets Omega_{f(u_l u_l')}[j][j'].
EdgeLabeling lex_labeling(const Graph& g, const EdgeLabeling& f, int n);

struct LexConditionCheck {
    bool ok = true;
    int condition = 0;                 // 1 or 2 on failure
    std::pair<int, int> witness{-1, -1};
};

// (i) equal sums force equal degrees; (ii) distinct sums stay distinct
// after the lex transform.
LexConditionCheck check_lex_conditions(const Graph& g, const EdgeLabeling& f, int n);

// Same check on bare (f+, deg) pairs, no graph needed.
bool check_lex_condition_pairs(const std::vector<std::pair<long long, int>>& sum_deg,
                               int n);

// Euler-tour labeling of a connected 2m-regular bipartite graph; exactly
// 3 colors {2q - q/2 + (m-1)q, m(q+1), mq}, first tour edge labeled q.
EdgeLabeling bipartite_regular_labeling(const Graph& g,
                                        std::optional<int> start_edge = std::nullopt);

struct TripartiteParts {
    int w = 0;
    std::vector<int> v2, v3;
};

// Validated (T1)+(T2)/(T2') instance.
struct TripartiteStructure {
    Graph graph;
    TripartiteParts parts;
    int a = 0, b = 0;   // w sends 2a (+1 if odd parity) edges into V2, 2b (+1) into V3
    int m = 0, n = 0;   // V2 degrees 2m, V3 degrees 2n
    bool odd_parity = false;
    std::vector<int> part_of;  // vertex -> 1, 2, 3
};

TripartiteStructure validate_tripartite(const Graph& g, const TripartiteParts& parts);

enum class TrailClass { R, S, T };

struct Trail {
    TrailClass cls;
    std::vector<int> vertices;  // closed: w ... w
    std::vector<int> edge_seq;
};

// Hub-anchored closed-trail factorization of the tour, rearranged so the
// vertices around every intermediate hub visit share a partite set; V2
// vertices land on even positions, V3 on odd.
struct TrailDecomposition {
    int hub = 0;
    std::vector<Trail> trails;  // in arranged order
    int alpha = 0, beta = 0, gamma = 0;
    std::vector<int> walk_vertices;  // x_1 .. x_q, x_1 = hub
    std::vector<int> walk_edges;
};

TrailDecomposition trail_decomposition(const EulerTour& tour,
                                       const TripartiteStructure& s);

// Euler-tour labeling of a validated tripartite instance; exactly 3 colors
// {m(q+1), nq, (a+b)(q+1)+ny} (even parity) or {m(q+1), nq, (a+b+1)(q+1)+ny}.
EdgeLabeling tripartite_labeling(const TripartiteStructure& s);

}  // namespace lam
