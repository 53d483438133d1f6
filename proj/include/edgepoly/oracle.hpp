#ifndef EDGEPOLY_ORACLE_HPP
#define EDGEPOLY_ORACLE_HPP

#include <cstdint>
#include <functional>

#include "edgepoly/weighting.hpp"

namespace edgepoly {

/// 3^14 is about 4.8M weightings; beyond that the exhaustive scan stops being
/// a desk-scale operation.
inline constexpr int kDefaultOracleMaxVertices = 14;

/// One generally valid weighting found by the exhaustive scan: at least one
/// positive and one negative edge, all (positive, negative) pairs
/// cycle-compatible. pattern is set when it additionally matches type I or II.
struct OracleEntry {
  Weighting weights;
  std::optional<Pattern> pattern;
};

struct OracleOptions {
  int max_vertices = kDefaultOracleMaxVertices;
  int jobs = 0;  // 0 = all available threads
};

/// Exhaustive scan of all 3^d weightings of a connected graph, in ascending
/// lexicographic order with -1 < 0 < +1 and vertex 1 most significant.
/// OpenMP-parallel; the result is identical for any thread count.
std::vector<OracleEntry> brute_force_certificates(const Graph& g, const OracleOptions& opts = {});

/// Single-threaded reference implementation of the same scan.
std::vector<OracleEntry> brute_force_certificates_serial(const Graph& g,
                                                         int max_vertices = kDefaultOracleMaxVertices);

/// Existence flags and counts without materializing the weightings.
struct OracleSummary {
  std::uint64_t checked = 0;
  std::uint64_t general_valid = 0;
  std::uint64_t pattern_i = 0;
  std::uint64_t pattern_ii = 0;
  bool has_general_valid() const { return general_valid > 0; }
  bool has_type_i() const { return pattern_i > 0; }
  bool has_type_ii() const { return pattern_ii > 0; }
};

/// Serial scan; when on_valid is given it is called (in enumeration order)
/// for every generally valid weighting.
OracleSummary oracle_scan(const Graph& g, int max_vertices = kDefaultOracleMaxVertices,
                          const std::function<void(const Weighting&, std::optional<Pattern>)>* on_valid = nullptr);

/// Decodes weighting index w in [0, 3^d): vertex 1 is the most significant
/// base-3 digit, digit values 0,1,2 map to weights -1,0,+1.
Weighting weighting_from_index(std::uint64_t w, int d);

}  // namespace edgepoly

#endif  // EDGEPOLY_ORACLE_HPP
