#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wcol/constructions.hpp"
#include "wcol/graph.hpp"

namespace wcol {

using Json = nlohmann::json;

// Representation: {"dimension": d, "objects": [{"type": "box", "lo": [...], "hi": [...]} |
//                  {"type": "ball", "center": [...], "radius": "p/q"}], "labels": [...], "thinness": t}
// Every number is a string "p", "p/q" or a decimal, so coordinates stay exact.
Json to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

// Graph: {"n": n, "labels": [...], "edges": [[i, j], ...]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Scaffold: the graph fields plus "parent", "level", "word" and "host".
Json to_json(const ScaffoldResult& s);
ScaffoldResult scaffold_from_json(const Json& j);

// Orderings are label sequences.
Json ordering_to_json(const Graph& g, const Ordering& ord);
Ordering ordering_from_json(const Graph& g, const Json& j);

bool is_representation_json(const Json& j);
bool is_scaffold_json(const Json& j);

/// Graph of any of the three file kinds (intersection graph for representations).
Graph load_graph(const Json& j);

std::string to_dot(const Graph& g, const std::optional<Ordering>& ord = std::nullopt);

Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed, newline-terminated; byte-identical for equal values.
void write_json_file(const std::filesystem::path& path, const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace wcol
