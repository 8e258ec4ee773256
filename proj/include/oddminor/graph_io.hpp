#pragma once

#include <string>
#include <string_view>

#include "oddminor/graph.hpp"

namespace oddminor {

enum class GraphFormat { Graph6, Dimacs, EdgeList };

/// Accepts "graph6", "dimacs" and "edgelist".
GraphFormat parse_format(std::string_view name);
std::string_view format_name(GraphFormat f);

/// Decodes one graph. Loops, parallel edges, bad headers and out-of-range
/// vertices are rejected with InputError.
///
/// graph6 covers the short form only (n <= 62); an optional ">>graph6<<"
/// header is tolerated. DIMACS uses "p edge n m" and 1-based "e u v" lines.
/// edgelist starts with "n <count>" followed by 0-based "u v" pairs.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Encodes `g`; output ends with a newline.
std::string write_graph(const Graph& g, GraphFormat format);

}  // namespace oddminor
