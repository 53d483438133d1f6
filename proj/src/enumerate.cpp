#include "edgepoly/enumerate.hpp"

namespace edgepoly {

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<Edge> es;
  int b = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++b)
      if ((mask >> b) & 1u) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

ConnectedGraphStream::ConnectedGraphStream(int n, int cap) : n_(n) {
  if (n < 1) throw InputError("enumeration needs n >= 1");
  if (n > cap) throw InputError("enumeration size " + std::to_string(n) + " above cap " + std::to_string(cap));
  limit_ = std::uint64_t{1} << pair_count(n);
}

std::optional<Graph> ConnectedGraphStream::next() {
  while (next_mask_ < limit_) {
    std::uint64_t mask = next_mask_++;
    Graph g = graph_from_edge_mask(n_, mask);
    if (is_connected(g)) {
      last_mask_ = mask;
      return g;
    }
  }
  return std::nullopt;
}

}  // namespace edgepoly
