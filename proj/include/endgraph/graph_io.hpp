#pragma once

#include <optional>
#include <string>

#include "endgraph/finite_graph.hpp"

namespace endgraph {

// DOT subset: undirected graphs only, `a -- b;` edge lines, bare `a;`
// vertex lines, repeated edge lines accumulate multiplicity. Identifiers
// are plain or double-quoted strings.
FiniteGraph from_dot(const std::string& text);
std::string to_dot(const FiniteGraph& g, const std::string& name = "g",
                   const VertexSet& frontier = {});

// JSON schema: {"vertices":[id...], "edges":[[id,id,mult]...]} with an
// optional "frontier" array on export.
FiniteGraph from_json_text(const std::string& text);
std::string to_json_text(const FiniteGraph& g, const VertexSet& frontier = {},
                         std::optional<int> radius = std::nullopt);

// Loads a graph from a file, dispatching on extension (.dot/.gv vs .json).
FiniteGraph load_graph_file(const std::string& path);

}  // namespace endgraph
