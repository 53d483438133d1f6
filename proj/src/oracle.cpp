#include "edgepoly/oracle.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace edgepoly {

namespace {

std::uint64_t pow3(int d) {
  std::uint64_t r = 1;
  for (int i = 0; i < d; ++i) r *= 3;
  return r;
}

void check_oracle_input(const Graph& g, int max_vertices) {
  if (!is_connected(g)) throw InputError("oracle requires a connected graph");
  if (g.vertex_count() > max_vertices)
    throw ResourceError("oracle cap is " + std::to_string(max_vertices) + " vertices, graph has " +
                        std::to_string(g.vertex_count()));
  if (g.vertex_count() > 40) throw ResourceError("3^d exceeds 64 bits past d = 40");
}

// In-place successor in the -1 < 0 < +1 order, vertex d least significant.
bool advance(Weighting& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[static_cast<size_t>(i)] < 1) {
      ++a[static_cast<size_t>(i)];
      return true;
    }
    a[static_cast<size_t>(i)] = -1;
  }
  return false;
}

}  // namespace

Weighting weighting_from_index(std::uint64_t w, int d) {
  Weighting a(static_cast<size_t>(d));
  for (int v = d; v >= 1; --v) {
    a[static_cast<size_t>(v - 1)] = static_cast<Weight>(static_cast<int>(w % 3) - 1);
    w /= 3;
  }
  return a;
}

OracleSummary oracle_scan(const Graph& g, int max_vertices,
                          const std::function<void(const Weighting&, std::optional<Pattern>)>* on_valid) {
  check_oracle_input(g, max_vertices);
  CompatibilityTable compat(g);
  int d = g.vertex_count();
  OracleSummary sum;
  sum.checked = pow3(d);
  Weighting a(static_cast<size_t>(d), -1);
  std::vector<int> pos, neg;
  do {
    auto c = detail::classify(g, compat, a, pos, neg);
    if (c.general_valid) {
      ++sum.general_valid;
      if (c.pattern == Pattern::TypeI) ++sum.pattern_i;
      if (c.pattern == Pattern::TypeII) ++sum.pattern_ii;
      if (on_valid) (*on_valid)(a, c.pattern);
    }
  } while (advance(a));
  return sum;
}

std::vector<OracleEntry> brute_force_certificates_serial(const Graph& g, int max_vertices) {
  std::vector<OracleEntry> out;
  std::function<void(const Weighting&, std::optional<Pattern>)> collect =
      [&out](const Weighting& a, std::optional<Pattern> p) { out.push_back({a, p}); };
  oracle_scan(g, max_vertices, &collect);
  return out;
}

std::vector<OracleEntry> brute_force_certificates(const Graph& g, const OracleOptions& opts) {
  check_oracle_input(g, opts.max_vertices);
#ifndef _OPENMP
  return brute_force_certificates_serial(g, opts.max_vertices);
#else
  CompatibilityTable compat(g);
  int d = g.vertex_count();
  std::uint64_t total = pow3(d);
  int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
  // contiguous chunks let each worker advance a weighting in place instead of
  // re-decoding every index
  std::uint64_t nchunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(threads) * 16);
  std::uint64_t chunk_size = (total + nchunks - 1) / nchunks;
  std::vector<std::pair<std::uint64_t, OracleEntry>> hits;

#pragma omp parallel num_threads(threads)
  {
    std::vector<std::pair<std::uint64_t, OracleEntry>> local;
    std::vector<int> pos, neg;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(nchunks); ++chunk) {
      std::uint64_t begin = static_cast<std::uint64_t>(chunk) * chunk_size;
      std::uint64_t end = std::min(total, begin + chunk_size);
      Weighting a = weighting_from_index(begin, d);
      for (std::uint64_t w = begin; w < end; ++w, advance(a)) {
        auto c = detail::classify(g, compat, a, pos, neg);
        if (c.general_valid) local.emplace_back(w, OracleEntry{a, c.pattern});
      }
    }
#pragma omp critical
    hits.insert(hits.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }

  std::sort(hits.begin(), hits.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<OracleEntry> out;
  out.reserve(hits.size());
  for (auto& [idx, entry] : hits) out.push_back(std::move(entry));
  return out;
#endif
}

}  // namespace edgepoly
