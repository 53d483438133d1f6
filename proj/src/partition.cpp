#include "edgepoly/partition.hpp"

#include <algorithm>

namespace edgepoly {

namespace {

// Cell index per vertex (1-based vertices, 0 = unassigned); throws unless the
// cells are disjoint and cover 1..d.
std::vector<int> cell_map(int d, std::span<const std::vector<VertexId>* const> cells) {
  std::vector<int> at(static_cast<size_t>(d) + 1, 0);
  for (size_t k = 0; k < cells.size(); ++k) {
    for (VertexId v : *cells[k]) {
      if (v < 1 || v > d) throw InputError("partition cell contains vertex out of range");
      if (at[static_cast<size_t>(v)] != 0) throw InputError("partition cells overlap at vertex " + std::to_string(v));
      at[static_cast<size_t>(v)] = static_cast<int>(k) + 1;
    }
  }
  for (VertexId v = 1; v <= d; ++v)
    if (at[static_cast<size_t>(v)] == 0) throw InputError("partition does not cover vertex " + std::to_string(v));
  return at;
}

bool all_pairs_compatible(const Graph& g, const std::vector<Edge>& es, const std::vector<Edge>& fs) {
  for (const Edge& e : es)
    for (const Edge& f : fs)
      if (!cycle_compatible(g, e, f)) return false;
  return true;
}

}  // namespace

PartitionView partition_view(const Graph& g, const Certificate& c) {
  validate_certificate(g, c);
  int d = g.vertex_count();
  if (c.pattern == Pattern::TypeI) {
    TypeIPartition p;
    for (VertexId v = 1; v <= d; ++v)
      (c.weights[static_cast<size_t>(v - 1)] > 0 ? p.positive : p.negative).push_back(v);
    return p;
  }
  TypeIIPartition p;
  auto weight = [&](VertexId v) { return c.weights[static_cast<size_t>(v - 1)]; };
  for (VertexId v = 1; v <= d; ++v) {
    if (weight(v) == 1) p.cells[0].push_back(v);
    else if (weight(v) == -1) p.cells[1].push_back(v);
  }
  for (VertexId v = 1; v <= d; ++v) {
    if (weight(v) != 0) continue;
    bool near_pos = false, near_neg = false;
    for (VertexId u : g.neighbors(v)) {
      if (weight(u) == 1) near_pos = true;
      if (weight(u) == -1) near_neg = true;
    }
    if (near_pos && near_neg)
      throw std::logic_error("zero vertex adjacent to both +1 and -1 under a valid certificate");
    if (near_pos) p.cells[3].push_back(v);       // V4 = N(V1) among zeros
    else if (near_neg) p.cells[2].push_back(v);  // V3 = N(V2) among zeros
    else p.cells[4].push_back(v);                // V5 = the rest
  }
  return p;
}

bool verify_partition_I(const Graph& g, const TypeIPartition& p) {
  const std::vector<VertexId>* cells[2] = {&p.positive, &p.negative};
  std::vector<int> at = cell_map(g.vertex_count(), cells);
  std::vector<Edge> inside_pos, inside_neg;
  for (const Edge& e : g.edges()) {
    int cu = at[static_cast<size_t>(e.u)], cv = at[static_cast<size_t>(e.v)];
    if (cu == 1 && cv == 1) inside_pos.push_back(e);
    if (cu == 2 && cv == 2) inside_neg.push_back(e);
  }
  if (inside_pos.empty() || inside_neg.empty()) return false;
  return all_pairs_compatible(g, inside_pos, inside_neg);
}

bool verify_partition_II(const Graph& g, const TypeIIPartition& p) {
  const std::vector<VertexId>* cells[5] = {&p.cells[0], &p.cells[1], &p.cells[2], &p.cells[3], &p.cells[4]};
  std::vector<int> at = cell_map(g.vertex_count(), cells);
  std::vector<Edge> e14, e23;
  for (const Edge& e : g.edges()) {
    int a = at[static_cast<size_t>(e.u)], b = at[static_cast<size_t>(e.v)];
    if (a > b) std::swap(a, b);
    if (a == 1 && b == 1) return false;  // G[V1 u V2] must be bipartite with parts V1, V2
    if (a == 2 && b == 2) return false;
    if (a == 1 && b == 3) return false;  // forbidden classes E13, E15, E24, E25
    if (a == 1 && b == 5) return false;
    if (a == 2 && b == 4) return false;
    if (a == 2 && b == 5) return false;
    if (a == 1 && b == 4) e14.push_back(e);
    if (a == 2 && b == 3) e23.push_back(e);
  }
  if (e14.empty() || e23.empty()) return false;
  return all_pairs_compatible(g, e14, e23);
}

Weighting induced_weighting(const Graph& g, const PartitionView& p) {
  Weighting a(static_cast<size_t>(g.vertex_count()), 0);
  auto put = [&](const std::vector<VertexId>& vs, Weight w) {
    for (VertexId v : vs) {
      if (v < 1 || v > g.vertex_count()) throw InputError("partition cell contains vertex out of range");
      a[static_cast<size_t>(v - 1)] = w;
    }
  };
  if (const auto* one = std::get_if<TypeIPartition>(&p)) {
    put(one->positive, 1);
    put(one->negative, -1);
  } else {
    const auto& two = std::get<TypeIIPartition>(p);
    put(two.cells[0], 1);
    put(two.cells[1], -1);
  }
  return a;
}

std::optional<Weighting> bipartite_zero_weighting(const Graph& g) {
  auto bp = bipartition(g);
  if (!bp) return std::nullopt;
  Weighting a(static_cast<size_t>(g.vertex_count()), 0);
  for (VertexId v : bp->left) a[static_cast<size_t>(v - 1)] = 1;
  for (VertexId v : bp->right) a[static_cast<size_t>(v - 1)] = -1;
  return a;
}

Certificate convert_type_I_to_II(const Graph& g, const Bipartition& bip, const Certificate& c) {
  int d = g.vertex_count();
  const std::vector<VertexId>* cells[2] = {&bip.left, &bip.right};
  std::vector<int> side = cell_map(d, cells);  // 1 = left, 2 = right
  for (const Edge& e : g.edges())
    if (side[static_cast<size_t>(e.u)] == side[static_cast<size_t>(e.v)])
      throw InputError("not a bipartition: edge inside one part");
  if (c.pattern != Pattern::TypeI) throw InputError("certificate is not a type I certificate");
  validate_certificate(g, c);

  Weighting b = c.weights;
  for (VertexId v = 1; v <= d; ++v) {
    Weight w = c.weights[static_cast<size_t>(v - 1)];
    if ((side[static_cast<size_t>(v)] == 1 && w == 1) || (side[static_cast<size_t>(v)] == 2 && w == -1))
      b[static_cast<size_t>(v - 1)] = 0;
  }

  // the rewrite must keep every edge's sign; this is what makes it a valid
  // type II arrangement
  auto before = edge_signs(g, c.weights);
  auto after = edge_signs(g, b);
  for (size_t k = 0; k < before.size(); ++k)
    if (before[k].sign != after[k].sign)
      throw std::logic_error("type I to II conversion changed an edge sign");
  SeparationCheck sc = check_separating(g, b);
  if (sc.pattern != Pattern::TypeII)
    throw std::logic_error("type I to II conversion did not produce a type II certificate");
  return make_certificate(g, b);
}

}  // namespace edgepoly
