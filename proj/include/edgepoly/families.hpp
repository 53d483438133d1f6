#ifndef EDGEPOLY_FAMILIES_HPP
#define EDGEPOLY_FAMILIES_HPP

#include <span>

#include "edgepoly/graph.hpp"

namespace edgepoly {

Graph complete_graph(int d);

/// Complete multipartite graph; part_sizes gives the block sizes, vertices
/// numbered block by block. A single part yields the empty graph.
Graph complete_multipartite(std::span<const int> part_sizes);

Graph cycle_graph(int n);  // n >= 3
Graph path_graph(int n);   // n >= 1

/// n-joined tri-pan T(n): apex x = 1, spine vertices i -> 1+i (i = 1..n),
/// base vertices y_j -> n+2+j (j = 0..n). Edges {x,i}, {i,y_{i-1}}, {i,y_i},
/// {y_{i-1},y_i}; 2n+2 vertices and 4n edges in total.
Graph tri_pan(int n);

/// Joins a path of length 3 through two fresh vertices d+1, d+2 across an
/// existing edge {u,v}, creating the new 4-cycle u, d+1, d+2, v.
Graph attach_four_cycle(const Graph& g, Edge base);

}  // namespace edgepoly

#endif  // EDGEPOLY_FAMILIES_HPP
