#include "edgepoly/polytope.hpp"

namespace edgepoly {

std::vector<int> rho(Edge e, int d) {
  if (e.u < 1 || e.v > d) throw InputError("edge endpoint out of range 1.." + std::to_string(d));
  std::vector<int> x(static_cast<size_t>(d), 0);
  x[static_cast<size_t>(e.u - 1)] = 1;
  x[static_cast<size_t>(e.v - 1)] = 1;
  return x;
}

std::vector<SkeletonEdge> skeleton_edges(const Graph& g) {
  CompatibilityTable compat(g);
  int m = g.edge_count();
  std::vector<SkeletonEdge> out;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (!compat(a, b)) out.push_back({g.edge(a), g.edge(b)});
  return out;
}

int dimension(const Graph& g) {
  if (g.vertex_count() < 1) throw InputError("dimension needs a non-empty graph");
  if (g.has_isolated_vertex()) throw InputError("dimension formula requires no isolated vertices");
  ComponentInfo info = component_info(g);
  int r = 0;
  for (char b : info.is_bipartite) r += b;
  return g.vertex_count() - r - 1;
}

}  // namespace edgepoly
