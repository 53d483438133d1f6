#ifndef EDGEPOLY_GRAPH_HPP
#define EDGEPOLY_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "edgepoly/errors.hpp"

namespace edgepoly {

/// Vertices are labeled 1..d at every interface.
using VertexId = int;

/// Unordered pair of distinct vertices, stored with the smaller endpoint first.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw InputError("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }

  auto operator<=>(const Edge&) const = default;
};

/// Labeled simple graph on vertices 1..d. Immutable after construction; all
/// queries are const and safe for concurrent readers.
///
/// Adjacency is kept twice: sorted neighbor lists for traversal and a packed
/// bit matrix for O(1) edge tests (one 64-bit word per row when d <= 64).
class Graph {
 public:
  Graph() = default;  // empty graph, d = 0

  static Graph from_edge_list(int d, std::span<const std::pair<int, int>> pairs);
  static Graph from_edges(int d, const std::vector<Edge>& edges);

  int vertex_count() const { return d_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<size_t>(index)]; }

  bool has_edge(VertexId a, VertexId b) const {
    if (a < 1 || a > d_ || b < 1 || b > d_ || a == b) return false;
    size_t bit = static_cast<size_t>(a - 1) * static_cast<size_t>(d_) + static_cast<size_t>(b - 1);
    return (bits_[bit >> 6] >> (bit & 63)) & 1u;
  }
  bool contains(Edge e) const { return has_edge(e.u, e.v); }

  /// Index of e in edges(), or -1.
  int edge_index(Edge e) const;

  std::span<const VertexId> neighbors(VertexId v) const {
    check_vertex(v);
    return nbrs_[static_cast<size_t>(v - 1)];
  }
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_isolated_vertex() const;

 private:
  void check_vertex(VertexId v) const {
    if (v < 1 || v > d_) throw InputError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(d_));
  }

  int d_ = 0;
  std::vector<Edge> edges_;                 // sorted, unique
  std::vector<std::vector<VertexId>> nbrs_; // sorted per vertex
  std::vector<std::uint64_t> bits_;         // d*d adjacency bits, row-major
};

bool is_connected(const Graph& g);

/// Vertex sets of the connected components, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// Components together with a per-component bipartiteness flag.
struct ComponentInfo {
  std::vector<std::vector<VertexId>> components;
  std::vector<char> is_bipartite;
};

ComponentInfo component_info(const Graph& g);

struct Bipartition {
  std::vector<VertexId> left, right;
};

/// Two-coloring of g, or nullopt if some component has an odd cycle. Each
/// component is colored independently with its lowest vertex on the left.
std::optional<Bipartition> bipartition(const Graph& g);

/// True iff e and f are vertex-disjoint and the subgraph induced by their four
/// endpoints contains a 4-cycle. With e = {i,j} and f = {k,l} both present this
/// reduces to (jk and il edges) or (jl and ik edges). Throws if e or f is not
/// an edge of g.
bool cycle_compatible(const Graph& g, Edge e, Edge f);

/// Precomputed cycle-compatibility for all edge pairs of one graph, indexed by
/// position in g.edges().
class CompatibilityTable {
 public:
  explicit CompatibilityTable(const Graph& g);
  bool operator()(int e, int f) const { return table_[static_cast<size_t>(e) * static_cast<size_t>(m_) + static_cast<size_t>(f)] != 0; }
  int edge_count() const { return m_; }

 private:
  int m_ = 0;
  std::vector<char> table_;
};

/// Image of g under a permutation of 1..d; perm[i-1] is the new label of i.
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace edgepoly

#endif  // EDGEPOLY_GRAPH_HPP
