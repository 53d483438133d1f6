#ifndef EDGEPOLY_SWEEP_HPP
#define EDGEPOLY_SWEEP_HPP

#include <cstdint>
#include <string>

#include "edgepoly/analyze.hpp"
#include "edgepoly/enumerate.hpp"
#include "edgepoly/oracle.hpp"

namespace edgepoly {

// Exhaustive verification pass: enumerates every labeled connected graph up
// to max_n, decides each one, and re-checks the structural claims on the
// produced certificates. With oracle enabled the backtracking searches are
// compared against the full 3^d scan, pattern reduction is checked, and the
// structure clauses are additionally evaluated on every valid weighting the
// oracle sees; failures of that stronger reading are reported as findings,
// not violations.

struct SweepOptions {
  int max_n = 6;
  bool oracle = false;
  int jobs = 0;  // 0 = all available threads
  int max_oracle_vertices = kDefaultOracleMaxVertices;
  int cap_n = kDefaultEnumerationCap;
};

struct SweepRow {
  int n = 0;
  std::uint64_t graphs = 0;       // labeled connected graphs enumerated
  std::uint64_t skipped = 0;      // rejected as analysis inputs (no edges)
  std::uint64_t decomposable = 0;
  std::uint64_t type_i_only = 0;
  std::uint64_t type_ii_only = 0;
  std::uint64_t both = 0;
  std::uint64_t neither = 0;
};

struct SweepIssue {
  int n = 0;
  std::uint64_t mask = 0;  // edge mask identifying the graph
  std::string check;
  std::string detail;
};

struct SweepSummary {
  SweepOptions options;
  std::vector<SweepRow> rows;
  std::vector<SweepIssue> violations;
  std::vector<SweepIssue> findings;
  double elapsed_ms = 0.0;
};

/// OpenMP-parallel sweep; the summary is identical for any jobs value.
SweepSummary run_sweep(const SweepOptions& opts);

/// Single-threaded reference implementation.
SweepSummary run_sweep_serial(const SweepOptions& opts);

}  // namespace edgepoly

#endif  // EDGEPOLY_SWEEP_HPP
