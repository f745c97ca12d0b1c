#include "lam/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace lam {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : p(vertex_count) {
    if (p < 0) throw Error("invalid-graph", "negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= p || v >= p)
            throw Error("invalid-graph", "edge endpoint out of range");
        if (u == v) throw Error("invalid-graph", "self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw Error("invalid-graph", "parallel edge");
    edges = std::move(edge_list);
    incident.assign(p, {});
    for (int e = 0; e < q(); ++e) {
        incident[edges[e].first].push_back(e);
        incident[edges[e].second].push_back(e);
    }
}

int Graph::other_end(int e, int v) const {
    return edges[e].first == v ? edges[e].second : edges[e].first;
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it != edges.end() && *it == std::make_pair(u, v))
        return static_cast<int>(it - edges.begin());
    return std::nullopt;
}

bool Graph::is_regular() const {
    for (int v = 1; v < p; ++v)
        if (degree(v) != degree(0)) return false;
    return true;
}

int Graph::regularity() const { return p == 0 ? 0 : degree(0); }

bool Graph::is_connected() const {
    if (p <= 1) return true;
    std::vector<char> seen(p, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : incident[v]) {
            int w = other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == p;
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw Error("invalid-spec", msg);
}

}  // namespace

Graph cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph complete(int n) {
    require(n >= 1, "complete needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph complete_bipartite(int m, int n) {
    require(m >= 1 && n >= 1, "complete_bipartite needs m,n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
    return Graph(m + n, std::move(e));
}

Graph null_graph(int n) {
    require(n >= 1, "null graph needs n >= 1");
    return Graph(n, {});
}

Graph wheel(int n) {
    require(n >= 3, "wheel needs n >= 3");
    return join(null_graph(1), cycle(n));
}

Graph mobius_ladder(int vertices) {
    require(vertices >= 4 && vertices % 2 == 0, "mobius ladder needs even order >= 4");
    int n = vertices;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n / 2; ++i) e.emplace_back(i, i + n / 2);
    return Graph(n, std::move(e));
}

Graph g_mn(int m, int n) {
    require(m >= 2 && n >= 2, "g_mn needs m,n >= 2");
    int cols = 2 * n;
    auto idx = [&](int i, int j) { return (i - 1) * cols + ((j % cols) + cols) % cols; };
    std::set<std::pair<int, int>> e;
    auto add = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        e.emplace(a, b);
    };
    for (int j = 0; j < cols; ++j) {
        add(idx(1, j), idx(1, j + 1));
        add(idx(m, j), idx(m, j + 1));
        for (int i = 1; i <= m - 1; ++i) {
            add(idx(i, j), idx(i + 1, j + 1));
            add(idx(i + 1, j), idx(i, j + 1));
        }
    }
    return Graph(m * cols, std::vector<std::pair<int, int>>(e.begin(), e.end()));
}

Graph generate(const FamilySpec& spec) {
    const auto& prm = spec.params;
    auto arity = [&](size_t k) {
        if (prm.size() != k) throw Error("invalid-spec", "wrong parameter count");
    };
    switch (spec.family) {
        case Family::cycle: arity(1); return cycle(prm[0]);
        case Family::complete: arity(1); return complete(prm[0]);
        case Family::complete_bipartite: arity(2); return complete_bipartite(prm[0], prm[1]);
        case Family::null_graph: arity(1); return null_graph(prm[0]);
        case Family::wheel: arity(1); return wheel(prm[0]);
        case Family::mobius_ladder: arity(1); return mobius_ladder(prm[0]);
        case Family::g_mn: arity(2); return g_mn(prm[0], prm[1]);
    }
    throw Error("invalid-spec", "unknown family");
}

Graph join(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> e = g.edges;
    for (auto [u, v] : h.edges) e.emplace_back(g.p + u, g.p + v);
    for (int u = 0; u < g.p; ++u)
        for (int v = 0; v < h.p; ++v) e.emplace_back(u, g.p + v);
    return Graph(g.p + h.p, std::move(e));
}

Graph lex_product(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges)
        for (int i = 0; i < h.p; ++i)
            for (int j = 0; j < h.p; ++j) e.emplace_back(u * h.p + i, v * h.p + j);
    for (int u = 0; u < g.p; ++u)
        for (auto [i, j] : h.edges) e.emplace_back(u * h.p + i, u * h.p + j);
    return Graph(g.p * h.p, std::move(e));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < g.p; ++u)
        for (auto [i, j] : h.edges) e.emplace_back(u * h.p + i, u * h.p + j);
    for (auto [u, v] : g.edges)
        for (int i = 0; i < h.p; ++i) e.emplace_back(u * h.p + i, v * h.p + i);
    return Graph(g.p * h.p, std::move(e));
}

Graph disjoint_copies(int m, const Graph& g) {
    if (m < 1) throw Error("invalid-spec", "disjoint_copies needs m >= 1");
    std::vector<std::pair<int, int>> e;
    for (int c = 0; c < m; ++c)
        for (auto [u, v] : g.edges) e.emplace_back(c * g.p + u, c * g.p + v);
    return Graph(m * g.p, std::move(e));
}

EulerTour euler_tour(const Graph& g, std::optional<int> start_edge,
                     std::optional<int> start_vertex) {
    if (g.q() == 0) throw Error("not-eulerian", "no edges");
    for (int v = 0; v < g.p; ++v)
        if (g.degree(v) % 2 != 0) throw Error("not-eulerian", "odd-degree vertex");

    int first_edge = start_edge.value_or(0);
    if (first_edge < 0 || first_edge >= g.q())
        throw Error("invalid-spec", "start edge out of range");
    int s = g.edges[first_edge].first;
    if (start_vertex) {
        s = *start_vertex;
        if (g.edges[first_edge].first != s && g.edges[first_edge].second != s)
            throw Error("invalid-spec", "start vertex not on start edge");
    }

    std::vector<char> used(g.q(), 0);
    // Closed circuit from v; first_forced < 0 means free choice throughout.
    auto circuit = [&](int v, int first_forced) {
        std::vector<int> vs{v}, es;
        int cur = v;
        int forced = first_forced;
        while (true) {
            int next_e = -1;
            if (forced >= 0) {
                next_e = forced;
                forced = -1;
            } else {
                for (int e : g.incident[cur])
                    if (!used[e]) {
                        next_e = e;
                        break;
                    }
            }
            if (next_e < 0) break;
            used[next_e] = 1;
            cur = g.other_end(next_e, cur);
            vs.push_back(cur);
            es.push_back(next_e);
        }
        if (cur != v) throw Error("not-eulerian", "open walk");  // unreachable: degrees even
        return std::make_pair(vs, es);
    };

    auto [vs, es] = circuit(s, first_edge);
    // Splice sub-circuits until every edge is used.
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t i = 0; i < vs.size(); ++i) {
            int v = vs[i];
            bool has_unused = false;
            for (int e : g.incident[v])
                if (!used[e]) {
                    has_unused = true;
                    break;
                }
            if (!has_unused) continue;
            auto [cvs, ces] = circuit(v, -1);
            vs.insert(vs.begin() + i + 1, cvs.begin() + 1, cvs.end());
            es.insert(es.begin() + i, ces.begin(), ces.end());
            progress = true;
            break;
        }
    }
    for (int e = 0; e < g.q(); ++e)
        if (!used[e]) throw Error("not-eulerian", "edge set disconnected");

    vs.pop_back();  // drop the closing repeat of x_1
    return EulerTour{std::move(vs), std::move(es)};
}

std::optional<Bipartition> bipartition(const Graph& g) {
    Bipartition b;
    b.side.assign(g.p, -1);
    for (int root = 0; root < g.p; ++root) {
        if (b.side[root] != -1) continue;
        b.side[root] = 0;
        std::queue<int> bfs;
        bfs.push(root);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int e : g.incident[v]) {
                int w = g.other_end(e, v);
                if (b.side[w] == -1) {
                    b.side[w] = 1 - b.side[v];
                    bfs.push(w);
                } else if (b.side[w] == b.side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < g.p; ++v)
        (b.side[v] == 0 ? b.part_a : b.part_b).push_back(v);
    return b;
}

std::vector<int> odd_closed_walk(const Graph& g) {
    std::vector<int> side(g.p, -1), parent(g.p, -1), depth(g.p, 0);
    for (int root = 0; root < g.p; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::queue<int> bfs;
        bfs.push(root);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int e : g.incident[v]) {
                int w = g.other_end(e, v);
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    bfs.push(w);
                } else if (side[w] == side[v]) {
                    // Tree paths from v and w up to their LCA, plus the edge (v,w).
                    int a = v, c = w;
                    std::vector<int> up_v, up_w;
                    while (depth[a] > depth[c]) { up_v.push_back(a); a = parent[a]; }
                    while (depth[c] > depth[a]) { up_w.push_back(c); c = parent[c]; }
                    while (a != c) {
                        up_v.push_back(a); a = parent[a];
                        up_w.push_back(c); c = parent[c];
                    }
                    // walk: lca -> ... -> v -> w -> ... -> lca
                    std::vector<int> walk{a};
                    for (auto it = up_v.rbegin(); it != up_v.rend(); ++it) walk.push_back(*it);
                    for (int x : up_w) walk.push_back(x);
                    walk.push_back(a);
                    if ((walk.size() - 1) % 2 == 0)
                        throw Error("internal", "odd walk construction failed");
                    return walk;
                }
            }
        }
    }
    throw Error("invalid-spec", "graph is bipartite, no odd closed walk");
}

namespace {

struct ColorSearch {
    const Graph& g;
    int k;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<int> color;  // 0 = uncolored

    ColorSearch(const Graph& g, int k, std::uint64_t budget)
        : g(g), k(k), budget(budget), color(g.p, 0) {}

    bool solve(int colored, int used) {
        if (++nodes > budget) throw Error("budget-exceeded", "chromatic number search");
        if (colored == g.p) return true;
        // DSATUR choice: max saturation, then max degree, then lowest index.
        int best = -1, best_sat = -1;
        for (int v = 0; v < g.p; ++v) {
            if (color[v]) continue;
            std::set<int> sat;
            for (int e : g.incident[v]) {
                int w = g.other_end(e, v);
                if (color[w]) sat.insert(color[w]);
            }
            int s = static_cast<int>(sat.size());
            if (s > best_sat ||
                (s == best_sat && g.degree(v) > g.degree(best))) {
                best = v;
                best_sat = s;
            }
        }
        int limit = std::min(k, used + 1);
        for (int c = 1; c <= limit; ++c) {
            bool ok = true;
            for (int e : g.incident[best])
                if (color[g.other_end(e, best)] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[best] = c;
            if (solve(colored + 1, std::max(used, c))) return true;
            color[best] = 0;
        }
        return false;
    }
};

}  // namespace

int chromatic_number(const Graph& g, std::uint64_t budget) {
    if (g.p == 0) return 0;
    if (g.q() == 0) return 1;
    if (g.p > 64) throw Error("budget-exceeded", "graph too large for exact chromatic number");

    // Greedy clique lower bound: extend from each vertex in degree order.
    std::vector<int> order(g.p);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    int lb = 1;
    for (int v : order) {
        std::vector<int> clique{v};
        for (int w : order) {
            if (w == v) continue;
            bool adj_all = true;
            for (int c : clique)
                if (!g.edge_index(w, c)) {
                    adj_all = false;
                    break;
                }
            if (adj_all) clique.push_back(w);
        }
        lb = std::max(lb, static_cast<int>(clique.size()));
    }
    for (int k = lb; k <= g.p; ++k) {
        ColorSearch search(g, k, budget);
        if (search.solve(0, 0)) return k;
        budget = budget > search.nodes ? budget - search.nodes : 0;
    }
    throw Error("internal", "chromatic search exhausted");  // unreachable
}

}  // namespace lam
