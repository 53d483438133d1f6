#ifndef EDGEPOLY_EDGELIST_IO_HPP
#define EDGEPOLY_EDGELIST_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "edgepoly/graph.hpp"

namespace edgepoly {

// Edge-list text format: first line "d m", then m lines "u v". Blank lines
// and lines starting with '#' are skipped. The writer emits canonical sorted
// edges, so generate -> parse -> write round-trips byte-identically.

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(std::string_view text);
Graph load_edge_list_file(const std::string& path);

std::string write_edge_list(const Graph& g);
void save_edge_list_file(const Graph& g, const std::string& path);

}  // namespace edgepoly

#endif  // EDGEPOLY_EDGELIST_IO_HPP
