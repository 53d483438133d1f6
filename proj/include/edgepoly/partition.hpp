#ifndef EDGEPOLY_PARTITION_HPP
#define EDGEPOLY_PARTITION_HPP

#include <array>
#include <variant>

#include "edgepoly/weighting.hpp"

namespace edgepoly {

// Vertex-partition characterizations equivalent to the two certificate
// patterns. A type I certificate splits V into the positively and negatively
// weighted vertices; a type II certificate induces five cells:
//   V1 = +1 vertices, V2 = -1 vertices,
//   V4 = zero vertices adjacent to V1, V3 = zero vertices adjacent to V2,
//   V5 = the remaining zero vertices.
// A zero vertex adjacent to both V1 and V2 cannot occur under a valid
// certificate (the two incident edges would be an incompatible pair sharing
// that vertex).

struct TypeIPartition {
  std::vector<VertexId> positive, negative;  // V+, V-
};

struct TypeIIPartition {
  std::array<std::vector<VertexId>, 5> cells;  // V1..V5
};

using PartitionView = std::variant<TypeIPartition, TypeIIPartition>;

/// The partition equivalent to a certificate. Throws if c is not valid for g.
PartitionView partition_view(const Graph& g, const Certificate& c);

/// True iff G[V+] and G[V-] each contain an edge and every pair of edges
/// across the two induced subgraphs is cycle-compatible. Throws when p is not
/// a partition of V.
bool verify_partition_I(const Graph& g, const TypeIPartition& p);

/// True iff (1) no edges inside V1 or inside V2, (2) the V1-V4 and V2-V3 edge
/// sets are non-empty and pairwise cycle-compatible across the two, and
/// (3) there are no V1-V3, V1-V5, V2-V4 or V2-V5 edges. Throws when p is not
/// a partition of V.
bool verify_partition_II(const Graph& g, const TypeIIPartition& p);

/// Weighting induced by a partition: +1/-1 on the two cells (type I), or
/// +1 on V1, -1 on V2, 0 elsewhere (type II).
Weighting induced_weighting(const Graph& g, const PartitionView& p);

/// For a bipartite graph, the all-+-1 weighting (+1 on the left part, -1 on
/// the right) under which every edge has sign zero; nullopt when some
/// component has an odd cycle.
std::optional<Weighting> bipartite_zero_weighting(const Graph& g);

/// Rewrites a type I certificate of a connected bipartite graph into a type
/// II certificate by zeroing the +1 weights on the left part and the -1
/// weights on the right part. Every edge keeps its sign; this is checked, and
/// a violation throws std::logic_error.
Certificate convert_type_I_to_II(const Graph& g, const Bipartition& bip, const Certificate& c);

}  // namespace edgepoly

#endif  // EDGEPOLY_PARTITION_HPP
