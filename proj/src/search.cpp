#include "edgepoly/search.hpp"

#include <algorithm>

namespace edgepoly {

namespace {

class BacktrackSearch {
 public:
  BacktrackSearch(const Graph& g, bool allow_zero)
      : g_(g), compat_(g), allow_zero_(allow_zero), d_(g.vertex_count()) {
    // edges become checkable once their larger endpoint is assigned
    completes_at_.assign(static_cast<size_t>(d_) + 1, {});
    for (int e = 0; e < g.edge_count(); ++e)
      completes_at_[static_cast<size_t>(g.edge(e).v)].push_back(e);
    a_.assign(static_cast<size_t>(d_), 0);
  }

  std::optional<Weighting> run() {
    if (!is_connected(g_)) throw InputError("search requires a connected graph");
    if (d_ > kMaxSearchVertices)
      throw ResourceError("search supports at most " + std::to_string(kMaxSearchVertices) + " vertices");
    if (d_ == 0 || g_.edge_count() < 2) return std::nullopt;  // needs a positive and a negative edge
    if (dfs(1, false)) return a_;
    return std::nullopt;
  }

 private:
  // Assign vertex v; any_nonzero tracks whether a nonzero weight was placed
  // among 1..v-1. Values are tried in ascending order, so the first complete
  // assignment is the lexicographic minimum.
  bool dfs(int v, bool any_nonzero) {
    if (v > d_) return leaf(any_nonzero);
    static constexpr Weight kValues[3] = {-1, 0, 1};
    for (Weight w : kValues) {
      if (w == 0 && !allow_zero_) continue;
      if (w == 1 && !any_nonzero) continue;  // first non-zero weight is -1 in the lex minimum
      if (try_assign(v, w)) {
        if (dfs(v + 1, any_nonzero || w != 0)) return true;
        unassign();
      }
    }
    return false;
  }

  bool leaf(bool any_nonzero) {
    if (pos_.empty() || neg_.empty()) return false;
    if (!any_nonzero) return false;
    if (allow_zero_) {
      bool any_zero = std::any_of(a_.begin(), a_.end(), [](Weight w) { return w == 0; });
      if (!any_zero) return false;  // type II needs a zero-weighted vertex
    }
    return true;
  }

  // Places w on v and signs the edges this completes; fails (rolling back
  // nothing) when a completed edge breaks the pattern or the compatibility
  // requirement. Stack marks allow unassign() to restore state exactly.
  bool try_assign(int v, Weight w) {
    a_[static_cast<size_t>(v - 1)] = w;
    size_t pos_mark = pos_.size(), neg_mark = neg_.size();
    for (int e : completes_at_[static_cast<size_t>(v)]) {
      int s = a_[static_cast<size_t>(g_.edge(e).u - 1)] + w;
      if (allow_zero_ && (s == 2 || s == -2)) {  // {1,1} / {-1,-1} forbidden in type II
        rollback(pos_mark, neg_mark);
        return false;
      }
      if (s > 0) {
        for (int f : neg_)
          if (!compat_(e, f)) {
            rollback(pos_mark, neg_mark);
            return false;
          }
        pos_.push_back(e);
      } else if (s < 0) {
        for (int f : pos_)
          if (!compat_(e, f)) {
            rollback(pos_mark, neg_mark);
            return false;
          }
        neg_.push_back(e);
      }
    }
    marks_.push_back({pos_mark, neg_mark});
    return true;
  }

  void unassign() {
    auto [pm, nm] = marks_.back();
    marks_.pop_back();
    rollback(pm, nm);
  }

  void rollback(size_t pos_mark, size_t neg_mark) {
    pos_.resize(pos_mark);
    neg_.resize(neg_mark);
  }

  const Graph& g_;
  CompatibilityTable compat_;
  bool allow_zero_;
  int d_;
  std::vector<std::vector<int>> completes_at_;
  Weighting a_;
  std::vector<int> pos_, neg_;
  std::vector<std::pair<size_t, size_t>> marks_;
};

}  // namespace

std::optional<Certificate> search_type_I(const Graph& g) {
  BacktrackSearch s(g, /*allow_zero=*/false);
  auto a = s.run();
  if (!a) return std::nullopt;
  return make_certificate(g, *a);
}

std::optional<Certificate> search_type_II(const Graph& g) {
  BacktrackSearch s(g, /*allow_zero=*/true);
  auto a = s.run();
  if (!a) return std::nullopt;
  return make_certificate(g, *a);
}

}  // namespace edgepoly
