#ifndef EDGEPOLY_POLYTOPE_HPP
#define EDGEPOLY_POLYTOPE_HPP

#include <vector>

#include "edgepoly/graph.hpp"

namespace edgepoly {

// Combinatorial model of the edge polytope of a graph: its vertices are the
// points rho(e), its 1-skeleton is determined by cycle-compatibility, and its
// dimension by the bipartite component count. The polytope itself is never
// built geometrically.

/// rho({i,j}) = e_i + e_j as a length-d 0/1 vector (coordinate sum 2).
std::vector<int> rho(Edge e, int d);

/// Pair of graph edges whose rho-images span an edge of the polytope.
struct SkeletonEdge {
  Edge first, second;  // first < second
  auto operator<=>(const SkeletonEdge&) const = default;
};

/// All unordered pairs {e,f} of distinct graph edges that are NOT
/// cycle-compatible; these are exactly the edges of the polytope.
std::vector<SkeletonEdge> skeleton_edges(const Graph& g);

/// dim P_G = d - r - 1 with r the number of bipartite connected components.
/// Throws on isolated vertices, where the formula is not applied.
int dimension(const Graph& g);

}  // namespace edgepoly

#endif  // EDGEPOLY_POLYTOPE_HPP
