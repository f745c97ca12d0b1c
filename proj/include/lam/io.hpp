#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "lam/constructions.hpp"
#include "lam/graph.hpp"
#include "lam/labeling.hpp"

namespace lam {

using json = nlohmann::json;

// {"p": int, "edges": [[u,v],...]}, 0-based vertex indices.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// {"labels": [...canonical edge order], "colors": [...], "proper": bool}
json labeling_to_json(const Graph& g, const EdgeLabeling& f);
EdgeLabeling labeling_from_json(const Graph& g, const json& j);

// {"w": idx, "V2": [...], "V3": [...]}
TripartiteParts parts_from_json(const json& j);

std::string graph_to_dot(const Graph& g);

// p lines of p space-separated tokens, "*" sentinel; round-trips byte-exactly.
std::string matrix_to_text(const LabelingMatrix& m);
LabelingMatrix matrix_from_text(const std::string& text);

}  // namespace lam
