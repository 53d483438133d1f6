#include "edgepoly/families.hpp"

#include <numeric>

namespace edgepoly {

Graph complete_graph(int d) {
  if (d < 1) throw InputError("complete graph needs d >= 1");
  std::vector<Edge> es;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) es.emplace_back(i, j);
  return Graph::from_edges(d, es);
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  if (part_sizes.empty()) throw InputError("multipartite graph needs at least one part");
  for (int s : part_sizes)
    if (s < 1) throw InputError("part sizes must be >= 1");
  int d = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
  std::vector<int> block(static_cast<size_t>(d) + 1, 0);
  int v = 1;
  for (size_t p = 0; p < part_sizes.size(); ++p)
    for (int k = 0; k < part_sizes[p]; ++k) block[static_cast<size_t>(v++)] = static_cast<int>(p);
  std::vector<Edge> es;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      if (block[static_cast<size_t>(i)] != block[static_cast<size_t>(j)]) es.emplace_back(i, j);
  return Graph::from_edges(d, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) es.emplace_back(i, i % n + 1);
  return Graph::from_edges(n, es);
}

Graph path_graph(int n) {
  if (n < 1) throw InputError("path needs n >= 1");
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

Graph tri_pan(int n) {
  if (n < 1) throw InputError("tri-pan needs n >= 1");
  const int x = 1;
  auto spine = [](int i) { return 1 + i; };
  auto base = [n](int j) { return n + 2 + j; };
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) {
    es.emplace_back(x, spine(i));
    es.emplace_back(spine(i), base(i - 1));
    es.emplace_back(spine(i), base(i));
    es.emplace_back(base(i - 1), base(i));
  }
  return Graph::from_edges(2 * n + 2, es);
}

Graph attach_four_cycle(const Graph& g, Edge e) {
  if (!g.contains(e)) throw InputError("attachment edge not in graph");
  int d = g.vertex_count();
  std::vector<Edge> es = g.edges();
  es.emplace_back(e.u, d + 1);
  es.emplace_back(d + 1, d + 2);
  es.emplace_back(d + 2, e.v);
  return Graph::from_edges(d + 2, es);
}

}  // namespace edgepoly
