#include "lam/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lam/constructions.hpp"

namespace lam {

namespace {

int solver_lower_bound(const Graph& g) {
    int lower = std::max(2, chromatic_number(g));
    if (g.is_connected()) {
        auto parts = bipartition(g);
        if (parts) {
            if (parts->part_a.size() == parts->part_b.size()) lower = std::max(lower, 3);
            else if (chi_la2_feasible(g).status == Chi2Status::fail)
                lower = std::max(lower, 3);
        }
    }
    return lower;
}

struct ExactSearch {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    bool done = false;

    int lower;
    int best_c;
    std::vector<long long> best_labels;

    std::vector<long long> labels;       // 0 = unassigned
    std::vector<char> used;              // label -> taken
    std::vector<long long> partial_sum;  // vertex -> sum of assigned incident labels
    std::vector<int> remaining;          // vertex -> unassigned incident edges
    std::map<long long, int> completed;  // completed sum -> multiplicity

    explicit ExactSearch(const Graph& g, std::uint64_t budget)
        : g(g), budget(budget), lower(solver_lower_bound(g)),
          best_c(g.p + 1),
          labels(g.q(), 0), used(g.q() + 1, 0),
          partial_sum(g.p, 0), remaining(g.p) {
        for (int v = 0; v < g.p; ++v) remaining[v] = g.degree(v);
    }

    void dfs(int e) {
        if (done || out_of_budget) return;
        if (e == g.q()) {
            int c = static_cast<int>(completed.size());
            if (c < best_c) {
                best_c = c;
                best_labels = labels;
                if (best_c == lower) done = true;
            }
            return;
        }
        auto [u, v] = g.edges[e];
        // Complement symmetry (regular graphs): the first edge only needs
        // labels up to ceil(q/2).
        long long limit = g.q();
        if (e == 0 && g.is_regular()) limit = (g.q() + 1) / 2;
        for (long long l = 1; l <= limit; ++l) {
            if (used[l]) continue;
            if (++nodes > budget) {
                out_of_budget = true;
                return;
            }
            used[l] = 1;
            labels[e] = l;
            partial_sum[u] += l;
            partial_sum[v] += l;
            --remaining[u];
            --remaining[v];

            bool ok = true;
            for (int z : {u, v}) {
                if (remaining[z] != 0) continue;
                for (int ie : g.incident[z]) {
                    int w = g.other_end(ie, z);
                    if (remaining[w] == 0 && partial_sum[w] == partial_sum[z]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            int newly_completed = 0;
            if (ok) {
                for (int z : {u, v})
                    if (remaining[z] == 0) {
                        ++completed[partial_sum[z]];
                        ++newly_completed;
                    }
                if (static_cast<int>(completed.size()) >= best_c) ok = false;
                if (ok) dfs(e + 1);
            }
            if (newly_completed) {
                for (int z : {u, v})
                    if (remaining[z] == 0) {
                        auto it = completed.find(partial_sum[z]);
                        if (--it->second == 0) completed.erase(it);
                    }
            }
            used[l] = 0;
            labels[e] = 0;
            partial_sum[u] -= l;
            partial_sum[v] -= l;
            ++remaining[u];
            ++remaining[v];
            if (done || out_of_budget) return;
        }
    }
};

}  // namespace

SolveResult chi_la_exact(const Graph& g, std::uint64_t budget) {
    for (int v = 0; v < g.p; ++v)
        if (g.degree(v) == 0) throw Error("invalid-spec", "isolated vertex");
    SolveResult r;
    if (has_k2_component(g)) {
        r.status = SolveStatus::undefined_no_labeling;
        return r;
    }
    ExactSearch search(g, budget);
    search.dfs(0);
    r.nodes_explored = search.nodes;
    if (search.out_of_budget) {
        r.status = SolveStatus::budget_exceeded;
        if (search.best_c <= g.p) {
            r.upper_bound = search.best_c;
            r.witness = make_labeling(g, search.best_labels);
        }
        return r;
    }
    if (search.best_c > g.p) {
        r.status = SolveStatus::undefined_no_labeling;
        return r;
    }
    r.status = SolveStatus::exact;
    r.chi_la = search.best_c;
    r.witness = make_labeling(g, search.best_labels);
    return r;
}

SolveResult chi_la_naive(const Graph& g) {
    for (int v = 0; v < g.p; ++v)
        if (g.degree(v) == 0) throw Error("invalid-spec", "isolated vertex");
    SolveResult r;
    const int q = g.q();
    std::vector<long long> perm(q);
    std::iota(perm.begin(), perm.end(), 1);
    int best = g.p + 1;
    std::vector<long long> best_labels;
    do {
        ++r.nodes_explored;
        std::vector<long long> sum(g.p, 0);
        for (int e = 0; e < q; ++e) {
            sum[g.edges[e].first] += perm[e];
            sum[g.edges[e].second] += perm[e];
        }
        bool proper = true;
        for (auto [u, v] : g.edges)
            if (sum[u] == sum[v]) {
                proper = false;
                break;
            }
        if (!proper) continue;
        std::sort(sum.begin(), sum.end());
        int c = static_cast<int>(std::unique(sum.begin(), sum.end()) - sum.begin());
        if (c < best) {
            best = c;
            best_labels = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best > g.p) {
        r.status = SolveStatus::undefined_no_labeling;
        return r;
    }
    r.status = SolveStatus::exact;
    r.chi_la = best;
    r.witness = make_labeling(g, best_labels);
    return r;
}

BoundsResult chi_la_bounds(const Graph& g) {
    BoundsResult b;
    b.lower = chromatic_number(g);
    b.lower_provenance = "chromatic number";
    if (g.is_connected() && g.q() > 0) {
        auto parts = bipartition(g);
        if (parts && parts->part_a.size() == parts->part_b.size() && b.lower < 3) {
            b.lower = 3;
            b.lower_provenance = "balanced bipartition excludes a 2-coloring";
        } else if (parts && chi_la2_feasible(g).status == Chi2Status::fail &&
                   b.lower < 3) {
            b.lower = 3;
            b.lower_provenance = "necessary conditions for chi_la = 2 fail";
        }
    }

    auto consider = [&](int c, const std::string& why) {
        if (!b.upper || c < *b.upper) {
            b.upper = c;
            b.upper_provenance = why;
        }
    };
    if (g.is_connected() && g.is_regular() && g.regularity() > 0 &&
        g.regularity() % 2 == 0 && bipartition(g)) {
        EdgeLabeling f = bipartite_regular_labeling(g);
        VerificationReport rep = verify(g, f);
        if (rep.is_proper) consider(rep.color_count, "Euler-tour labeling of even-regular bipartite graph");
    }
    if (g.q() > 0 && g.q() <= 9 && !has_k2_component(g)) {
        SolveResult s = chi_la_exact(g);
        if (s.status == SolveStatus::exact) {
            consider(*s.chi_la, "exhaustive search");
            if (*s.chi_la > b.lower) {
                b.lower = *s.chi_la;
                b.lower_provenance = "exhaustive search";
            }
        }
    }
    return b;
}

}  // namespace lam
