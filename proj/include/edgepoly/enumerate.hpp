#ifndef EDGEPOLY_ENUMERATE_HPP
#define EDGEPOLY_ENUMERATE_HPP

#include <cstdint>
#include <optional>

#include "edgepoly/graph.hpp"

namespace edgepoly {

/// Enumeration cap; raising it much beyond 7 makes full sweeps impractical.
inline constexpr int kDefaultEnumerationCap = 7;

/// Number of vertex pairs C(n,2), i.e. bits in an edge mask.
int pair_count(int n);

/// Graph on n vertices from an edge bitmask. Bit b corresponds to the b-th
/// pair in lexicographic order (1,2),(1,3),...,(1,n),(2,3),...
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// Streams every labeled simple connected graph on n vertices exactly once,
/// in ascending edge-mask order. Single consumer.
class ConnectedGraphStream {
 public:
  explicit ConnectedGraphStream(int n, int cap = kDefaultEnumerationCap);

  std::optional<Graph> next();

  /// Mask of the most recently returned graph.
  std::uint64_t last_mask() const { return last_mask_; }

 private:
  int n_;
  std::uint64_t next_mask_ = 0;
  std::uint64_t limit_;
  std::uint64_t last_mask_ = 0;
};

}  // namespace edgepoly

#endif  // EDGEPOLY_ENUMERATE_HPP
