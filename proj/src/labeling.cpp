#include "lam/labeling.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lam {

EdgeLabeling make_labeling(const Graph& g, std::vector<long long> labels) {
    if (static_cast<int>(labels.size()) != g.q())
        throw Error("malformed-labeling", "label count != edge count");
    std::vector<char> seen(g.q() + 1, 0);
    for (long long l : labels) {
        if (l < 1 || l > g.q() || seen[l])
            throw Error("malformed-labeling", "labels not a bijection onto [1,q]");
        seen[l] = 1;
    }
    EdgeLabeling f;
    f.labels = std::move(labels);
    f.induced_sum.assign(g.p, 0);
    for (int e = 0; e < g.q(); ++e) {
        f.induced_sum[g.edges[e].first] += f.labels[e];
        f.induced_sum[g.edges[e].second] += f.labels[e];
    }
    return f;
}

VerificationReport verify(const Graph& g, const EdgeLabeling& f) {
    if (static_cast<int>(f.labels.size()) != g.q())
        throw Error("malformed-labeling", "label map domain mismatch");
    VerificationReport r;
    std::vector<char> seen(g.q() + 1, 0);
    r.is_bijection = true;
    for (long long l : f.labels) {
        if (l < 1 || l > g.q() || seen[l]) {
            r.is_bijection = false;
            break;
        }
        seen[l] = 1;
    }
    std::vector<long long> sum(g.p, 0);
    for (int e = 0; e < g.q(); ++e) {
        sum[g.edges[e].first] += f.labels[e];
        sum[g.edges[e].second] += f.labels[e];
    }
    for (int e = 0; e < g.q(); ++e) {
        auto [u, v] = g.edges[e];
        if (sum[u] == sum[v]) r.violations.emplace_back(u, v);
    }
    r.is_proper = r.is_bijection && r.violations.empty();
    r.colors.assign(sum.begin(), sum.end());
    std::sort(r.colors.begin(), r.colors.end());
    r.colors.erase(std::unique(r.colors.begin(), r.colors.end()), r.colors.end());
    r.color_count = static_cast<int>(r.colors.size());
    return r;
}

EdgeLabeling complement(const Graph& g, const EdgeLabeling& f) {
    std::vector<long long> labels(f.labels.size());
    for (size_t e = 0; e < f.labels.size(); ++e) labels[e] = g.q() + 1 - f.labels[e];
    return make_labeling(g, std::move(labels));
}

DeletionOutcome delete_extreme_edge(const Graph& g, const EdgeLabeling& f, int edge) {
    const long long q = g.q();
    if (!g.is_regular()) throw Error("lemma-precondition", "graph not regular");
    if (edge < 0 || edge >= g.q()) throw Error("lemma-precondition", "edge out of range");
    if (!verify(g, f).is_proper) throw Error("lemma-precondition", "labeling not proper");
    if (f.labels[edge] != 1 && f.labels[edge] != q)
        throw Error("lemma-precondition", "deleted edge must carry label 1 or q");

    std::vector<std::pair<int, int>> rest = g.edges;
    rest.erase(rest.begin() + edge);
    Graph gm(g.p, std::move(rest));

    // Restrict L to G - e; shift down by one when the deleted label is 1.
    auto restrict_labels = [&](const EdgeLabeling& L) {
        long long removed = L.labels[edge];
        std::vector<long long> out;
        for (int e = 0; e < g.q(); ++e) {
            if (e == edge) continue;
            out.push_back(removed == 1 ? L.labels[e] - 1 : L.labels[e]);
        }
        return out;
    };

    EdgeLabeling cf = complement(g, f);
    std::vector<std::vector<long long>> candidates;
    for (const auto& base : {restrict_labels(f), restrict_labels(cf)}) {
        candidates.push_back(base);
        std::vector<long long> comp(base.size());
        for (size_t e = 0; e < base.size(); ++e) comp[e] = q - base[e];  // q' + 1 = q
        candidates.push_back(comp);
    }

    std::optional<DeletionOutcome> best;
    EdgeLabeling first_candidate;
    for (const auto& labels : candidates) {
        EdgeLabeling cand = make_labeling(gm, labels);
        VerificationReport rep = verify(gm, cand);
        if (first_candidate.labels.empty()) first_candidate = cand;
        if (!rep.is_proper) continue;
        if (!best || rep.color_count < best->report.color_count)
            best = DeletionOutcome{gm, cand, rep, false};
    }
    if (best) return *best;
    DeletionOutcome failed{gm, first_candidate, verify(gm, first_candidate), true};
    return failed;
}

LabelingMatrix to_matrix(const Graph& g, const EdgeLabeling& f) {
    if (static_cast<int>(f.labels.size()) != g.q())
        throw Error("malformed-labeling", "label map domain mismatch");
    LabelingMatrix m;
    m.p = g.p;
    m.entries.assign(g.p, std::vector<long long>(g.p, 0));
    for (int e = 0; e < g.q(); ++e) {
        auto [u, v] = g.edges[e];
        m.entries[u][v] = f.labels[e];
        m.entries[v][u] = f.labels[e];
    }
    return m;
}

std::pair<Graph, EdgeLabeling> from_matrix(const LabelingMatrix& m) {
    if (static_cast<int>(m.entries.size()) != m.p)
        throw Error("malformed-matrix", "row count mismatch");
    for (const auto& row : m.entries)
        if (static_cast<int>(row.size()) != m.p)
            throw Error("malformed-matrix", "column count mismatch");
    for (int i = 0; i < m.p; ++i) {
        if (m.entries[i][i] != 0) throw Error("malformed-matrix", "diagonal not sentinel");
        for (int j = 0; j < m.p; ++j)
            if (m.entries[i][j] != m.entries[j][i])
                throw Error("malformed-matrix", "matrix not symmetric");
    }
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, long long> label_of;
    for (int i = 0; i < m.p; ++i)
        for (int j = i + 1; j < m.p; ++j)
            if (m.entries[i][j] != 0) {
                edges.emplace_back(i, j);
                label_of[{i, j}] = m.entries[i][j];
            }
    Graph g(m.p, edges);
    std::vector<long long> labels;
    for (auto e : g.edges) labels.push_back(label_of.at(e));
    EdgeLabeling f;
    try {
        f = make_labeling(g, std::move(labels));
    } catch (const Error&) {
        throw Error("malformed-matrix", "entries not bijective onto [1,q]");
    }
    return {std::move(g), std::move(f)};
}

std::optional<TwoColorCertificate> two_coloring_certificate(const Graph& g,
                                                            const EdgeLabeling& f) {
    VerificationReport rep = verify(g, f);
    if (!rep.is_proper) throw Error("precondition", "labeling not proper");
    if (rep.color_count != 2) return std::nullopt;

    TwoColorCertificate cert;
    cert.x = rep.colors[0];
    cert.y = rep.colors[1];
    std::vector<long long> sum(g.p, 0);
    for (int e = 0; e < g.q(); ++e) {
        sum[g.edges[e].first] += f.labels[e];
        sum[g.edges[e].second] += f.labels[e];
    }
    for (int v = 0; v < g.p; ++v) (sum[v] == cert.x ? cert.X : cert.Y).push_back(v);

    const long long q = g.q();
    long long half = q * (q + 1) / 2;
    bool ok = cert.x * static_cast<long long>(cert.X.size()) == half &&
              cert.y * static_cast<long long>(cert.Y.size()) == half &&
              cert.X.size() > cert.Y.size();
    for (auto [u, v] : g.edges)
        if (sum[u] == sum[v]) ok = false;  // both endpoints in one class
    if (!ok) throw Error("internal-invariant", "two-coloring certificate identity failed");
    return cert;
}

Chi2Decision chi_la2_feasible(const Graph& g) {
    if (!g.is_connected()) throw Error("unsupported", "chi_la2_feasible needs a connected graph");
    auto parts = bipartition(g);
    if (!parts) return {Chi2Status::fail, "non-bipartite"};
    long long s1 = static_cast<long long>(parts->part_a.size());
    long long s2 = static_cast<long long>(parts->part_b.size());
    if (s1 == s2) return {Chi2Status::fail, "equal partite sets"};
    const long long q = g.q();
    long long binom = (q + 1) * q / 2;
    if (s1 > 0 && binom % s1 != 0) return {Chi2Status::fail, "binom(q+1,2) not divisible by |V1|"};
    if (s2 > 0 && binom % s2 != 0) return {Chi2Status::fail, "binom(q+1,2) not divisible by |V2|"};
    return {Chi2Status::unknown, ""};
}

bool has_k2_component(const Graph& g) {
    for (auto [u, v] : g.edges)
        if (g.degree(u) == 1 && g.degree(v) == 1) return true;
    return false;
}

}  // namespace lam
