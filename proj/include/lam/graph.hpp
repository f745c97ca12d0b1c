#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lam {

// Error with a machine-readable kind tag ("invalid-spec", "not-eulerian", ...).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Simple undirected graph. Edge list is canonical: each pair stored
// (low, high) and the list sorted lexicographically, so identical graphs
// serialize identically.
struct Graph {
    int p = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> incident;  // vertex -> incident edge indices

    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int q() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(incident[v].size()); }
    int other_end(int e, int v) const;
    std::optional<int> edge_index(int u, int v) const;

    bool is_regular() const;
    int regularity() const;  // degree of vertex 0 (caller checks is_regular)
    bool is_connected() const;

    bool operator==(const Graph& o) const { return p == o.p && edges == o.edges; }
};

enum class Family { cycle, complete, complete_bipartite, null_graph, wheel, mobius_ladder, g_mn };

struct FamilySpec {
    Family family;
    std::vector<int> params;
};

Graph generate(const FamilySpec& spec);

Graph cycle(int n);                       // n >= 3
Graph complete(int n);                    // n >= 1
Graph complete_bipartite(int m, int n);   // m, n >= 1
Graph null_graph(int n);                  // n >= 1
Graph wheel(int n);                       // n >= 3, hub is vertex n
Graph mobius_ladder(int vertices);        // even, >= 4
Graph g_mn(int m, int n);                 // m, n >= 2

Graph join(const Graph& g, const Graph& h);
Graph lex_product(const Graph& g, const Graph& h);
Graph cartesian_product(const Graph& g, const Graph& h);
Graph disjoint_copies(int m, const Graph& g);

// Closed Euler tour: vertices x_1..x_q (implicit return to x_1) and the
// parallel edge-index sequence, edge_seq[i] joining vertices[i] and
// vertices[i+1 mod q].
struct EulerTour {
    std::vector<int> vertices;
    std::vector<int> edge_seq;
};

// Deterministic Hierholzer tour, lowest-index unused-edge tie-breaking.
// If start_edge is given the tour traverses it first; start_vertex (when
// given, must be an endpoint of start_edge) fixes x_1.
EulerTour euler_tour(const Graph& g,
                     std::optional<int> start_edge = std::nullopt,
                     std::optional<int> start_vertex = std::nullopt);

struct Bipartition {
    std::vector<int> part_a, part_b;
    std::vector<int> side;  // vertex -> 0/1
};

std::optional<Bipartition> bipartition(const Graph& g);

// For a non-bipartite graph, an explicit closed walk of odd length
// (vertex sequence, first == last). Throws if the graph is bipartite.
std::vector<int> odd_closed_walk(const Graph& g);

// Exact chromatic number: greedy clique lower bound + DSATUR-ordered search.
int chromatic_number(const Graph& g, std::uint64_t budget = 50'000'000);

}  // namespace lam
