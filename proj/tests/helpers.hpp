#ifndef EDGEPOLY_TESTS_HELPERS_HPP
#define EDGEPOLY_TESTS_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "edgepoly/families.hpp"
#include "edgepoly/graph.hpp"
#include "edgepoly/weighting.hpp"

namespace ep_test {

using namespace edgepoly;

// The 6-vertex, 7-edge hexagon-with-chord used throughout: both type I and
// type II decomposable, bipartite with parts {1,3,5} / {2,4,6}.
inline Graph hexagon_with_chord() {
  std::vector<std::pair<int, int>> pairs{{1, 4}, {3, 4}, {1, 2}, {2, 3}, {4, 5}, {1, 6}, {5, 6}};
  return Graph::from_edge_list(6, pairs);
}

inline Weighting W(std::initializer_list<int> ws) {
  Weighting a;
  for (int w : ws) a.push_back(static_cast<Weight>(w));
  return a;
}

// Oracle for cycle_compatible: literally search for a 4-cycle among the
// permutations of the four endpoints, independent of the cross-edge shortcut.
inline bool literal_cycle_compatible(const Graph& g, Edge e, Edge f) {
  std::vector<VertexId> vs{e.u, e.v, f.u, f.v};
  std::sort(vs.begin(), vs.end());
  if (std::unique(vs.begin(), vs.end()) != vs.end()) return false;
  do {
    if (g.has_edge(vs[0], vs[1]) && g.has_edge(vs[1], vs[2]) && g.has_edge(vs[2], vs[3]) &&
        g.has_edge(vs[3], vs[0]))
      return true;
  } while (std::next_permutation(vs.begin(), vs.end()));
  return false;
}

// Number of distinct 4-cycles, counted over canonical vertex orderings.
inline int count_four_cycles(const Graph& g) {
  int n = g.vertex_count(), count = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          VertexId q[4] = {a, b, c, d};
          std::sort(q, q + 4);
          do {
            // canonical representative: smallest vertex first, second < fourth
            if (q[0] != std::min({q[0], q[1], q[2], q[3]}) || q[1] > q[3]) continue;
            if (g.has_edge(q[0], q[1]) && g.has_edge(q[1], q[2]) && g.has_edge(q[2], q[3]) &&
                g.has_edge(q[3], q[0]))
              ++count;
          } while (std::next_permutation(q, q + 4));
        }
  return count;
}

// Labeled connected graph counts by the classic subtraction recurrence,
// independent of the mask enumeration.
inline std::uint64_t connected_count_formula(int n) {
  auto binom = [](int a, int b) {
    std::uint64_t r = 1;
    for (int i = 0; i < b; ++i) r = r * static_cast<std::uint64_t>(a - i) / static_cast<std::uint64_t>(i + 1);
    return r;
  };
  auto all_graphs = [](int k) { return std::uint64_t{1} << (k * (k - 1) / 2); };
  std::vector<std::uint64_t> c(static_cast<size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) {
    std::uint64_t total = all_graphs(k);
    for (int j = 1; j < k; ++j)
      total -= binom(k - 1, j - 1) * c[static_cast<size_t>(j)] * all_graphs(k - j);
    c[static_cast<size_t>(k)] = total;
  }
  return c[static_cast<size_t>(n)];
}

inline Graph disjoint_union(const std::vector<Graph>& parts) {
  int d = 0;
  std::vector<Edge> es;
  for (const Graph& g : parts) {
    for (const Edge& e : g.edges()) es.emplace_back(e.u + d, e.v + d);
    d += g.vertex_count();
  }
  return Graph::from_edges(d, es);
}

}  // namespace ep_test

#endif  // EDGEPOLY_TESTS_HELPERS_HPP
