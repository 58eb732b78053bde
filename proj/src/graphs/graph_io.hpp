#pragma once

#include <string>
#include <string_view>

#include "graphs/oriented_graph.hpp"
#include "json.hpp"

namespace skewspec::graphs {

// Text form "<n>:<code>". The code has one character per vertex pair (i,j),
// i < j, in the order (0,1),(0,2),...,(0,n-1),(1,2),...,(n-2,n-1):
// '+' is the arc i->j, '-' the arc j->i, '0' no edge.
OrientedGraph parse_code(std::string_view text);
std::string to_code(const OrientedGraph& g);

// {"n": int, "arcs": [[i,j],...]} with arcs sorted lexicographically.
nlohmann::json to_json(const OrientedGraph& g);

// Accepts the {"n","arcs"} form or {"skew": [[...]]} holding a skew-adjacency
// matrix. Malformed documents raise ParseError; a matrix that is not a
// skew-adjacency matrix raises NotSkewAdjacency.
OrientedGraph from_json(const nlohmann::json& doc);

/// Auto-detects JSON (leading '{') versus the pair code.
OrientedGraph parse_graph(std::string_view text);

}  // namespace skewspec::graphs
