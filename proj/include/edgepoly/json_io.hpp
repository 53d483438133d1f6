#ifndef EDGEPOLY_JSON_IO_HPP
#define EDGEPOLY_JSON_IO_HPP

#include <json.hpp>

#include "edgepoly/analyze.hpp"
#include "edgepoly/partition.hpp"
#include "edgepoly/sweep.hpp"

namespace edgepoly {

// Certificate schema:
//   {"weights":[...], "pattern":"I"|"II",
//    "positive":[[u,v],...], "negative":[...], "zero":[...]}
// weights are listed in vertex order (entry k belongs to vertex k+1).

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const PartitionView& p);
nlohmann::json to_json(const StructureCheck& s);
nlohmann::json to_json(const SweepSummary& s);

/// Full analyze payload: graph stats, verdict, certificates, partition views,
/// structure checks, optional oracle cross-check, timings.
struct OracleCrossCheck {
  OracleSummary summary;
  bool agrees_type_i = true;
  bool agrees_type_ii = true;
  bool pattern_reduction_holds = true;
};

nlohmann::json report_to_json(const Graph& g, const AnalysisReport& r,
                              const OracleCrossCheck* oracle = nullptr);

}  // namespace edgepoly

#endif  // EDGEPOLY_JSON_IO_HPP
