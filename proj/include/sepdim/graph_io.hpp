#pragma once

#include <iosfwd>
#include <string>

#include "sepdim/graph.hpp"

namespace sepdim {

// Edge-list text format: first line `n`; each following non-empty line
// `u v` with 0 <= u < v < n; `#` starts a comment line. Written files are
// canonical: header, then edges in lexicographic order, one per line.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

void write_graph(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace sepdim
