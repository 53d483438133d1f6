#ifndef EDGEPOLY_ANALYZE_HPP
#define EDGEPOLY_ANALYZE_HPP

#include "edgepoly/search.hpp"

namespace edgepoly {

/// A graph carved out of another one, with vertices compacted to 1..k and
/// labels[i-1] remembering the original label of vertex i.
struct Subgraph {
  Graph graph;
  std::vector<VertexId> labels;

  VertexId original(VertexId v) const { return labels[static_cast<size_t>(v - 1)]; }
};

/// The zero subgraph of a certificate: exactly its zero edges, on their
/// endpoints only (isolated vertices dropped). Empty when there are no zero
/// edges.
Subgraph zero_subgraph(const Graph& g, const Certificate& c);

/// Which structural clause applies to a certificate's zero subgraph and
/// whether it holds. Clauses, by (graph bipartite?, pattern):
///   'a' non-bipartite, type I  -> zero subgraph connected and bipartite
///   'b' non-bipartite, type II -> exactly two components, one bipartite, one not
///   'c' bipartite,     type I  -> exactly two components
///   '-' bipartite,     type II -> no claim; reported data only, passed = true
struct StructureCheck {
  char clause = '-';
  bool passed = true;
  bool graph_bipartite = false;
  int zero_edge_count = 0;
  std::vector<std::vector<VertexId>> components;  // original labels
  std::vector<bool> component_bipartite;
};

/// Requires g connected and c valid for g.
StructureCheck structure_check(const Graph& g, const Certificate& c);

struct ComponentReport {
  std::vector<VertexId> vertices;
  bool decomposable = false;
  bool has_type_i = false;
  bool has_type_ii = false;
};

/// Result bundle for one analyzed graph. For disconnected inputs the
/// certificates come from a witnessing component, extended by zero weights on
/// the rest; pattern labels then refer to the witnessing component.
struct AnalysisReport {
  bool connected = true;
  bool decomposable = false;
  std::optional<Certificate> type_i, type_ii;
  std::optional<StructureCheck> structure_i, structure_ii;  // connected inputs only
  std::vector<ComponentReport> components;                  // disconnected inputs only
  double total_ms = 0.0;
  double search_i_ms = 0.0;
  double search_ii_ms = 0.0;
};

/// Runs both searches (or the component reduction for disconnected graphs).
/// Rejects graphs with no edges or with isolated vertices.
AnalysisReport decide(const Graph& g);

/// Decomposability of a disconnected graph via its components: decomposable
/// iff some component is, with the witnessing certificate extended by zero
/// weights elsewhere. Also valid for connected inputs.
AnalysisReport component_reduce(const Graph& g);

}  // namespace edgepoly

#endif  // EDGEPOLY_ANALYZE_HPP
