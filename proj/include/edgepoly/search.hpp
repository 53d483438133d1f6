#ifndef EDGEPOLY_SEARCH_HPP
#define EDGEPOLY_SEARCH_HPP

#include <optional>

#include "edgepoly/weighting.hpp"

namespace edgepoly {

/// Backtracking searches work well past the brute-force range; the cap only
/// guards against absurd inputs.
inline constexpr int kMaxSearchVertices = 64;

// Both searches assign weights in vertex order, prune as soon as an assigned
// positive edge and an assigned negative edge fail cycle-compatibility, and
// return the lexicographically smallest valid weighting under -1 < 0 < +1.
// The valid set is closed under global sign flip, so the minimum always puts
// -1 at the first non-zero position; the search explores only that half.

/// Smallest type I certificate (all weights +-1), or nullopt.
std::optional<Certificate> search_type_I(const Graph& g);

/// Smallest type II certificate (some zero weight, no {1,1} or {-1,-1}
/// edge), or nullopt.
std::optional<Certificate> search_type_II(const Graph& g);

}  // namespace edgepoly

#endif  // EDGEPOLY_SEARCH_HPP
