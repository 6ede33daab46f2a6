#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pfu/graph.hpp"

namespace pfu {

/// Decode one graph6 line (no ">>graph6<<" header, no trailing newline).
/// Throws GraphError on a malformed length prefix, wrong body length,
/// characters outside 63..126, or nonzero padding bits.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Edge-list text: "n m" then m lines "u v", 0-based.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Reads every graph in a file. A file whose first token line has two
/// integers is treated as a single edge list; otherwise each nonblank line is
/// one graph6 string.
std::vector<Graph> read_graphs(std::istream& in);
std::vector<Graph> read_graph_file(const std::string& path);

}  // namespace pfu
