#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nureg/graph.hpp"

namespace nureg {

// "n m" on the first line, then m lines "u v" with 1-based vertices.
// Blank lines and lines starting with '#' are skipped.
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// A file holds either one edge list or graph6 strings, one per line.
std::vector<Graph> read_graph_file(const std::string& path);

}  // namespace nureg
