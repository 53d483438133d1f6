#include "edgepoly/graph.hpp"

#include <algorithm>
#include <numeric>

namespace edgepoly {

Graph Graph::from_edge_list(int d, std::span<const std::pair<int, int>> pairs) {
  if (d < 1) throw InputError("vertex count must be >= 1");
  std::vector<Edge> es;
  es.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 1 || a > d || b < 1 || b > d)
      throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range 1.." + std::to_string(d));
    es.emplace_back(a, b);  // Edge ctor rejects loops
  }
  return from_edges(d, es);
}

Graph Graph::from_edges(int d, const std::vector<Edge>& edges) {
  if (d < 0) throw InputError("vertex count must be >= 0");
  Graph g;
  g.d_ = d;
  g.edges_ = edges;
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.nbrs_.assign(static_cast<size_t>(d), {});
  size_t nbits = static_cast<size_t>(d) * static_cast<size_t>(d);
  g.bits_.assign((nbits + 63) / 64, 0);
  for (const Edge& e : g.edges_) {
    if (e.u < 1 || e.v > d) throw InputError("edge endpoint out of range");
    g.nbrs_[static_cast<size_t>(e.u - 1)].push_back(e.v);
    g.nbrs_[static_cast<size_t>(e.v - 1)].push_back(e.u);
    size_t b1 = static_cast<size_t>(e.u - 1) * static_cast<size_t>(d) + static_cast<size_t>(e.v - 1);
    size_t b2 = static_cast<size_t>(e.v - 1) * static_cast<size_t>(d) + static_cast<size_t>(e.u - 1);
    g.bits_[b1 >> 6] |= std::uint64_t{1} << (b1 & 63);
    g.bits_[b2 >> 6] |= std::uint64_t{1} << (b2 & 63);
  }
  for (auto& ns : g.nbrs_) std::sort(ns.begin(), ns.end());
  return g;
}

int Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::has_isolated_vertex() const {
  for (const auto& ns : nbrs_)
    if (ns.empty()) return true;
  return false;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  int d = g.vertex_count();
  std::vector<char> seen(static_cast<size_t>(d) + 1, 0);
  std::vector<std::vector<VertexId>> comps;
  std::vector<VertexId> stack;
  for (VertexId s = 1; s <= d; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<VertexId> comp;
    seen[static_cast<size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (VertexId y : g.neighbors(x)) {
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return connected_components(g).size() == 1;
}

ComponentInfo component_info(const Graph& g) {
  int d = g.vertex_count();
  std::vector<int> color(static_cast<size_t>(d) + 1, -1);
  ComponentInfo info;
  std::vector<VertexId> stack;
  for (VertexId s = 1; s <= d; ++s) {
    if (color[static_cast<size_t>(s)] != -1) continue;
    std::vector<VertexId> comp;
    bool odd = false;
    color[static_cast<size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (VertexId y : g.neighbors(x)) {
        if (color[static_cast<size_t>(y)] == -1) {
          color[static_cast<size_t>(y)] = 1 - color[static_cast<size_t>(x)];
          stack.push_back(y);
        } else if (color[static_cast<size_t>(y)] == color[static_cast<size_t>(x)]) {
          odd = true;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    info.components.push_back(std::move(comp));
    info.is_bipartite.push_back(odd ? 0 : 1);
  }
  return info;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  int d = g.vertex_count();
  std::vector<int> color(static_cast<size_t>(d) + 1, -1);
  std::vector<VertexId> stack;
  for (VertexId s = 1; s <= d; ++s) {
    if (color[static_cast<size_t>(s)] != -1) continue;
    color[static_cast<size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (color[static_cast<size_t>(y)] == -1) {
          color[static_cast<size_t>(y)] = 1 - color[static_cast<size_t>(x)];
          stack.push_back(y);
        } else if (color[static_cast<size_t>(y)] == color[static_cast<size_t>(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition bp;
  for (VertexId v = 1; v <= d; ++v)
    (color[static_cast<size_t>(v)] == 0 ? bp.left : bp.right).push_back(v);
  return bp;
}

bool cycle_compatible(const Graph& g, Edge e, Edge f) {
  if (!g.contains(e)) throw InputError("first edge not in graph");
  if (!g.contains(f)) throw InputError("second edge not in graph");
  if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) return false;
  return (g.has_edge(e.v, f.u) && g.has_edge(e.u, f.v)) ||
         (g.has_edge(e.v, f.v) && g.has_edge(e.u, f.u));
}

CompatibilityTable::CompatibilityTable(const Graph& g) : m_(g.edge_count()) {
  table_.assign(static_cast<size_t>(m_) * static_cast<size_t>(m_), 0);
  for (int a = 0; a < m_; ++a) {
    for (int b = a + 1; b < m_; ++b) {
      char c = cycle_compatible(g, g.edge(a), g.edge(b)) ? 1 : 0;
      table_[static_cast<size_t>(a) * static_cast<size_t>(m_) + static_cast<size_t>(b)] = c;
      table_[static_cast<size_t>(b) * static_cast<size_t>(m_) + static_cast<size_t>(a)] = c;
    }
  }
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  int d = g.vertex_count();
  if (static_cast<int>(perm.size()) != d) throw InputError("permutation length != vertex count");
  std::vector<char> hit(static_cast<size_t>(d) + 1, 0);
  for (int p : perm) {
    if (p < 1 || p > d || hit[static_cast<size_t>(p)]) throw InputError("not a permutation of 1..d");
    hit[static_cast<size_t>(p)] = 1;
  }
  std::vector<Edge> es;
  es.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    es.emplace_back(perm[static_cast<size_t>(e.u - 1)], perm[static_cast<size_t>(e.v - 1)]);
  return Graph::from_edges(d, es);
}

}  // namespace edgepoly
