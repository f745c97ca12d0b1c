#include "lam/io.hpp"

#include <sstream>

namespace lam {

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    return json{{"p", g.p}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("edges"))
        throw Error("parse", "graph JSON needs \"p\" and \"edges\"");
    if (!j["p"].is_number_integer()) throw Error("parse", "\"p\" must be an integer");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw Error("parse", "edge must be a pair of vertex indices");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph(j["p"].get<int>(), std::move(edges));
    } catch (const Error& err) {
        throw Error("parse", err.what());
    }
}

json labeling_to_json(const Graph& g, const EdgeLabeling& f) {
    VerificationReport rep = verify(g, f);
    return json{{"labels", f.labels}, {"colors", rep.colors}, {"proper", rep.is_proper}};
}

EdgeLabeling labeling_from_json(const Graph& g, const json& j) {
    if (!j.is_object() || !j.contains("labels"))
        throw Error("parse", "labeling JSON needs \"labels\"");
    std::vector<long long> labels;
    for (const auto& l : j["labels"]) {
        if (!l.is_number_integer()) throw Error("parse", "labels must be integers");
        labels.push_back(l.get<long long>());
    }
    return make_labeling(g, std::move(labels));
}

TripartiteParts parts_from_json(const json& j) {
    if (!j.is_object() || !j.contains("w") || !j.contains("V2") || !j.contains("V3"))
        throw Error("parse", "parts JSON needs \"w\", \"V2\", \"V3\"");
    TripartiteParts p;
    p.w = j["w"].get<int>();
    for (const auto& v : j["V2"]) p.v2.push_back(v.get<int>());
    for (const auto& v : j["V3"]) p.v3.push_back(v.get<int>());
    return p;
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.p; ++v) out << "  v" << v << " [label=\"" << v << "\"];\n";
    for (auto [u, v] : g.edges) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string matrix_to_text(const LabelingMatrix& m) {
    std::ostringstream out;
    for (int i = 0; i < m.p; ++i) {
        for (int j = 0; j < m.p; ++j) {
            if (j) out << ' ';
            if (m.entries[i][j] == 0) out << '*';
            else out << m.entries[i][j];
        }
        out << '\n';
    }
    return out.str();
}

LabelingMatrix matrix_from_text(const std::string& text) {
    LabelingMatrix m;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::vector<long long> entries;
        std::string tok;
        while (row >> tok) {
            if (tok == "*") entries.push_back(0);
            else {
                try {
                    entries.push_back(std::stoll(tok));
                } catch (...) {
                    throw Error("parse", "bad matrix token: " + tok);
                }
            }
        }
        m.entries.push_back(std::move(entries));
    }
    m.p = static_cast<int>(m.entries.size());
    for (const auto& row : m.entries)
        if (static_cast<int>(row.size()) != m.p)
            throw Error("parse", "matrix not square");
    return m;
}

}  // namespace lam
