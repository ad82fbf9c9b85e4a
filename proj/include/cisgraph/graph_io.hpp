#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cisgraph/errors.hpp"
#include "cisgraph/graph.hpp"

namespace cisgraph {

enum class GraphFormat { graph6, edgelist };

/// Parses one graph. graph6 follows the nauty encoding (6-bit groups over the
/// column-major upper triangle); an optional ">>graph6<<" header is accepted
/// and ignored. edgelist is a first line "n" followed by one "u v" line per
/// edge. Malformed input raises ParseError carrying the byte offset.
Graph parse_graph(std::string_view text, GraphFormat format);

/// One graph per non-empty line, graph6 format (the usual corpus layout).
std::vector<Graph> parse_graph6_corpus(std::string_view text);

std::string to_graph6(const Graph& g);
std::string to_edgelist(const Graph& g);

} // namespace cisgraph
