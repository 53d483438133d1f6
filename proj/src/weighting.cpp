#include "edgepoly/weighting.hpp"

#include <algorithm>

namespace edgepoly {

std::string pattern_name(Pattern p) { return p == Pattern::TypeI ? "I" : "II"; }

namespace detail {

void validate_weighting(const Graph& g, const Weighting& a) {
  if (static_cast<int>(a.size()) != g.vertex_count())
    throw InputError("weighting length " + std::to_string(a.size()) + " != vertex count " +
                     std::to_string(g.vertex_count()));
  for (Weight w : a)
    if (w < -1 || w > 1) throw InputError("weights must be in {-1,0,1}");
}

Classified classify(const Graph& g, const CompatibilityTable& compat, const Weighting& a,
                    std::vector<int>& pos, std::vector<int>& neg) {
  pos.clear();
  neg.clear();
  bool unit_pair = false;
  int m = g.edge_count();
  for (int e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    int s = a[static_cast<size_t>(ed.u - 1)] + a[static_cast<size_t>(ed.v - 1)];
    if (s > 0)
      pos.push_back(e);
    else if (s < 0)
      neg.push_back(e);
    if (s == 2 || s == -2) unit_pair = true;
  }
  if (pos.empty() || neg.empty()) return {false, std::nullopt};
  for (int e : pos)
    for (int f : neg)
      if (!compat(e, f)) return {false, std::nullopt};
  bool any_zero = std::any_of(a.begin(), a.end(), [](Weight w) { return w == 0; });
  std::optional<Pattern> pat;
  if (!any_zero)
    pat = Pattern::TypeI;
  else if (!unit_pair)
    pat = Pattern::TypeII;
  return {true, pat};
}

}  // namespace detail

std::vector<EdgeSign> edge_signs(const Graph& g, const Weighting& a) {
  detail::validate_weighting(g, a);
  std::vector<EdgeSign> out;
  out.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    Weight wu = a[static_cast<size_t>(e.u - 1)];
    Weight wv = a[static_cast<size_t>(e.v - 1)];
    int s = wu + wv;
    out.push_back({e, s > 0 ? 1 : (s < 0 ? -1 : 0), std::min(wu, wv), std::max(wu, wv)});
  }
  return out;
}

SeparationCheck check_separating(const Graph& g, const Weighting& a) {
  detail::validate_weighting(g, a);
  if (!is_connected(g)) throw InputError("check_separating requires a connected graph");
  SeparationCheck r;
  for (const EdgeSign& es : edge_signs(g, a)) {
    if (es.sign > 0)
      r.positive.push_back(es.edge);
    else if (es.sign < 0)
      r.negative.push_back(es.edge);
    else
      r.zero.push_back(es.edge);
    if (es.sig_lo == es.sig_hi && es.sig_lo != 0) r.has_unit_signature_pair = true;
  }
  r.has_zero_weight = std::any_of(a.begin(), a.end(), [](Weight w) { return w == 0; });
  if (r.positive.empty() || r.negative.empty()) return r;
  for (const Edge& e : r.positive) {
    for (const Edge& f : r.negative) {
      if (!cycle_compatible(g, e, f)) {
        r.incompatible_pair = {e, f};
        return r;
      }
    }
  }
  r.general_valid = true;
  if (!r.has_zero_weight)
    r.pattern = Pattern::TypeI;
  else if (!r.has_unit_signature_pair)
    r.pattern = Pattern::TypeII;
  return r;
}

std::optional<Pattern> is_separating(const Graph& g, const Weighting& a) {
  return check_separating(g, a).pattern;
}

Certificate make_certificate(const Graph& g, const Weighting& a) {
  SeparationCheck c = check_separating(g, a);
  if (!c.pattern) throw InputError("weighting is not a type I or type II separating weighting");
  return Certificate{a, *c.pattern, std::move(c.positive), std::move(c.negative), std::move(c.zero)};
}

void validate_certificate(const Graph& g, const Certificate& c) {
  Certificate rebuilt = make_certificate(g, c.weights);
  if (rebuilt.pattern != c.pattern || rebuilt.positive != c.positive ||
      rebuilt.negative != c.negative || rebuilt.zero != c.zero)
    throw InputError("certificate is inconsistent with its weighting");
}

}  // namespace edgepoly
