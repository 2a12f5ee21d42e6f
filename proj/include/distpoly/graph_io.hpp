#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "distpoly/graph.hpp"

namespace distpoly {

/// Parses "u v" lines (0-based). Blank lines and '#' lines are skipped; an
/// optional "n=<k>" line fixes the order, otherwise it is 1 + max index.
/// Throws ParseError for malformed text or empty input, StructureError for
/// self-loops, duplicate edges and endpoints >= n.
Graph from_edge_list(std::string_view text);

/// Writes the "n=<k>" header followed by one "u v" line per edge.
std::string to_edge_list(const Graph& g);

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// whitespace are ignored.
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Every non-blank line of a graph6 file.
std::vector<Graph> graphs_from_graph6_lines(std::string_view text);

}  // namespace distpoly
