#pragma once

#include <string>

#include <json.hpp>

#include "pgr/embedding.hpp"
#include "pgr/graph.hpp"

namespace pgr {

/// Text format: first non-comment line is the vertex count n, then one
/// "u v" edge per line with 0 <= u < v < n. Lines starting with '#' are
/// comments. Errors carry "line L, column C".
Graph parse_graph(const std::string& text);

/// Canonical text: "n\n" then edges sorted ascending, one per line.
std::string serialize_graph(const Graph& g);

/// {"n": int, "edges": [[u,v],...], "labels": {"id": "text"}?}
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// Accepts either the text or the JSON form (JSON when the first
/// non-space character is '{').
Graph parse_graph_any(const std::string& text);

/// {"dim": 2|3, "points": {"<vid>": [x,y] | [x,y,z]}}
nlohmann::json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const nlohmann::json& j);

/// One "u v H|V" line per edge, in edge order. Undefined labels are written
/// as "U".
std::string serialize_orientation(const Graph& g, const OrientationMap& f);
OrientationMap parse_orientation(const Graph& g, const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace pgr
