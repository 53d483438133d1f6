#include "edgepoly/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>

#include "edgepoly/partition.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace edgepoly {

namespace {

struct GraphResult {
  bool skipped = false;
  bool has_i = false, has_ii = false;
  std::vector<SweepIssue> violations;
  std::vector<SweepIssue> findings;
};

void flag(std::vector<SweepIssue>& sink, int n, std::uint64_t mask, std::string check, std::string detail) {
  sink.push_back({n, mask, std::move(check), std::move(detail)});
}

void check_round_trip(const Graph& g, const Certificate& c, int n, std::uint64_t mask,
                      std::vector<SweepIssue>& violations) {
  PartitionView pv = partition_view(g, c);
  bool ok = c.pattern == Pattern::TypeI ? verify_partition_I(g, std::get<TypeIPartition>(pv))
                                        : verify_partition_II(g, std::get<TypeIIPartition>(pv));
  if (!ok) {
    flag(violations, n, mask, "partition-round-trip",
         "partition of the type " + pattern_name(c.pattern) + " certificate failed verification");
    return;
  }
  Weighting induced = induced_weighting(g, pv);
  if (is_separating(g, induced) != c.pattern)
    flag(violations, n, mask, "partition-round-trip",
         "weighting induced by the verified partition is not accepted with pattern " + pattern_name(c.pattern));
}

void analyze_one_checked(int n, std::uint64_t mask, const Graph& g, const SweepOptions& opts,
                         GraphResult& res);

GraphResult analyze_one(int n, std::uint64_t mask, const Graph& g, const SweepOptions& opts) {
  GraphResult res;
  if (g.edge_count() == 0) {
    res.skipped = true;
    return res;
  }
  try {
    analyze_one_checked(n, mask, g, opts, res);
  } catch (const std::exception& ex) {
    // exceptions must not escape the worker loop
    flag(res.violations, n, mask, "internal-error", ex.what());
  }
  return res;
}

void analyze_one_checked(int n, std::uint64_t mask, const Graph& g, const SweepOptions& opts,
                         GraphResult& res) {
  AnalysisReport rep = decide(g);
  res.has_i = rep.type_i.has_value();
  res.has_ii = rep.type_ii.has_value();

  // structural claims on the produced certificates
  if (rep.structure_i && !rep.structure_i->passed)
    flag(res.violations, n, mask, "structure-theorem",
         std::string("clause ") + rep.structure_i->clause + " failed for the type I certificate");
  if (rep.structure_ii && !rep.structure_ii->passed)
    flag(res.violations, n, mask, "structure-theorem",
         std::string("clause ") + rep.structure_ii->clause + " failed for the type II certificate");

  if (rep.type_i) check_round_trip(g, *rep.type_i, n, mask, res.violations);
  if (rep.type_ii) check_round_trip(g, *rep.type_ii, n, mask, res.violations);

  // bipartite graphs: type I and type II decomposability coincide, and the
  // sign-preserving rewrite must go through
  auto bp = bipartition(g);
  if (bp) {
    if (res.has_i != res.has_ii)
      flag(res.violations, n, mask, "bipartite-equivalence",
           std::string("type I ") + (res.has_i ? "found" : "absent") + " but type II " +
               (res.has_ii ? "found" : "absent"));
    if (rep.type_i) {
      try {
        convert_type_I_to_II(g, *bp, *rep.type_i);
      } catch (const std::logic_error& ex) {
        flag(res.violations, n, mask, "bipartite-conversion", ex.what());
      }
    }
  }

  if (opts.oracle && g.vertex_count() <= opts.max_oracle_vertices) {
    // evaluate the universal reading of the structure clauses on every valid
    // weighting; failures are findings, not violations
    std::function<void(const Weighting&, std::optional<Pattern>)> on_valid =
        [&](const Weighting& a, std::optional<Pattern> pat) {
          if (!pat) return;
          StructureCheck sc = structure_check(g, make_certificate(g, a));
          if (!sc.passed)
            flag(res.findings, n, mask, "structure-theorem-universal",
                 std::string("clause ") + sc.clause + " failed for a type " + pattern_name(*pat) + " weighting");
        };
    OracleSummary sum = oracle_scan(g, opts.max_oracle_vertices, &on_valid);
    if (sum.has_type_i() != res.has_i)
      flag(res.violations, n, mask, "oracle-type-i",
           res.has_i ? "search found a certificate, oracle found none" : "oracle found a certificate, search found none");
    if (sum.has_type_ii() != res.has_ii)
      flag(res.violations, n, mask, "oracle-type-ii",
           res.has_ii ? "search found a certificate, oracle found none" : "oracle found a certificate, search found none");
    if (sum.has_general_valid() && !sum.has_type_i() && !sum.has_type_ii())
      flag(res.violations, n, mask, "pattern-reduction",
           "a generally valid weighting exists but no type I or type II weighting does");
  }
}

void fold(SweepRow& row, std::vector<SweepIssue>& violations, std::vector<SweepIssue>& findings,
          GraphResult&& res) {
  ++row.graphs;
  if (res.skipped) {
    ++row.skipped;
  } else {
    bool dec = res.has_i || res.has_ii;
    row.decomposable += dec;
    row.neither += !dec;
    row.both += res.has_i && res.has_ii;
    row.type_i_only += res.has_i && !res.has_ii;
    row.type_ii_only += res.has_ii && !res.has_i;
  }
  for (auto& v : res.violations) violations.push_back(std::move(v));
  for (auto& f : res.findings) findings.push_back(std::move(f));
}

void sort_issues(std::vector<SweepIssue>& v) {
  std::sort(v.begin(), v.end(), [](const SweepIssue& a, const SweepIssue& b) {
    return std::tie(a.n, a.mask, a.check, a.detail) < std::tie(b.n, b.mask, b.check, b.detail);
  });
}

void validate_options(const SweepOptions& opts) {
  if (opts.max_n < 1) throw InputError("sweep needs max_n >= 1");
  if (opts.max_n > opts.cap_n)
    throw InputError("sweep size " + std::to_string(opts.max_n) + " above cap " + std::to_string(opts.cap_n));
}

}  // namespace

SweepSummary run_sweep_serial(const SweepOptions& opts) {
  validate_options(opts);
  auto t0 = std::chrono::steady_clock::now();
  SweepSummary sum;
  sum.options = opts;
  for (int n = 1; n <= opts.max_n; ++n) {
    SweepRow row;
    row.n = n;
    ConnectedGraphStream stream(n, opts.cap_n);
    while (auto g = stream.next())
      fold(row, sum.violations, sum.findings, analyze_one(n, stream.last_mask(), *g, opts));
    sum.rows.push_back(row);
  }
  sort_issues(sum.violations);
  sort_issues(sum.findings);
  sum.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return sum;
}

SweepSummary run_sweep(const SweepOptions& opts) {
  validate_options(opts);
#ifndef _OPENMP
  return run_sweep_serial(opts);
#else
  auto t0 = std::chrono::steady_clock::now();
  SweepSummary sum;
  sum.options = opts;
  int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
  for (int n = 1; n <= opts.max_n; ++n) {
    SweepRow row;
    row.n = n;
    std::int64_t total = std::int64_t{1} << pair_count(n);
#pragma omp parallel num_threads(threads)
    {
      SweepRow local_row;
      std::vector<SweepIssue> local_viol, local_find;
#pragma omp for schedule(dynamic, 64)
      for (std::int64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_edge_mask(n, static_cast<std::uint64_t>(mask));
        if (!is_connected(g)) continue;
        fold(local_row, local_viol, local_find,
             analyze_one(n, static_cast<std::uint64_t>(mask), g, opts));
      }
#pragma omp critical
      {
        row.graphs += local_row.graphs;
        row.skipped += local_row.skipped;
        row.decomposable += local_row.decomposable;
        row.type_i_only += local_row.type_i_only;
        row.type_ii_only += local_row.type_ii_only;
        row.both += local_row.both;
        row.neither += local_row.neither;
        for (auto& v : local_viol) sum.violations.push_back(std::move(v));
        for (auto& f : local_find) sum.findings.push_back(std::move(f));
      }
    }
    sum.rows.push_back(row);
  }
  sort_issues(sum.violations);
  sort_issues(sum.findings);
  sum.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return sum;
#endif
}

}  // namespace edgepoly
