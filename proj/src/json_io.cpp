#include "edgepoly/json_io.hpp"

namespace edgepoly {

using nlohmann::json;

namespace {

json edges_to_json(const std::vector<Edge>& es) {
  json arr = json::array();
  for (const Edge& e : es) arr.push_back({e.u, e.v});
  return arr;
}

json weights_to_json(const Weighting& a) {
  json arr = json::array();
  for (Weight w : a) arr.push_back(static_cast<int>(w));
  return arr;
}

}  // namespace

json to_json(const Certificate& c) {
  return json{{"weights", weights_to_json(c.weights)},
              {"pattern", pattern_name(c.pattern)},
              {"positive", edges_to_json(c.positive)},
              {"negative", edges_to_json(c.negative)},
              {"zero", edges_to_json(c.zero)}};
}

json to_json(const PartitionView& p) {
  if (const auto* one = std::get_if<TypeIPartition>(&p))
    return json{{"positive", one->positive}, {"negative", one->negative}};
  const auto& two = std::get<TypeIIPartition>(p);
  return json{{"v1", two.cells[0]}, {"v2", two.cells[1]}, {"v3", two.cells[2]},
              {"v4", two.cells[3]}, {"v5", two.cells[4]}};
}

json to_json(const StructureCheck& s) {
  return json{{"clause", std::string(1, s.clause)},
              {"passed", s.passed},
              {"graph_bipartite", s.graph_bipartite},
              {"zero_edges", s.zero_edge_count},
              {"components", s.components},
              {"component_bipartite", s.component_bipartite}};
}

json to_json(const SweepSummary& s) {
  json rows = json::array();
  for (const SweepRow& r : s.rows)
    rows.push_back({{"n", r.n},
                    {"graphs", r.graphs},
                    {"skipped", r.skipped},
                    {"decomposable", r.decomposable},
                    {"type_i_only", r.type_i_only},
                    {"type_ii_only", r.type_ii_only},
                    {"both", r.both},
                    {"neither", r.neither}});
  auto issues = [](const std::vector<SweepIssue>& is) {
    json arr = json::array();
    for (const SweepIssue& i : is)
      arr.push_back({{"n", i.n}, {"mask", i.mask}, {"check", i.check}, {"detail", i.detail}});
    return arr;
  };
  return json{{"max_n", s.options.max_n},
              {"oracle", s.options.oracle},
              {"rows", rows},
              {"violations", issues(s.violations)},
              {"findings", issues(s.findings)},
              {"elapsed_ms", s.elapsed_ms}};
}

json report_to_json(const Graph& g, const AnalysisReport& r, const OracleCrossCheck* oracle) {
  json j{{"vertices", g.vertex_count()},
         {"edges", g.edge_count()},
         {"connected", r.connected},
         {"decomposable", r.decomposable},
         {"type_i", nullptr},
         {"type_ii", nullptr},
         {"partitions", {{"type_i", nullptr}, {"type_ii", nullptr}}},
         {"structure", {{"type_i", nullptr}, {"type_ii", nullptr}}},
         {"timings",
          {{"total_ms", r.total_ms}, {"search_type_i_ms", r.search_i_ms}, {"search_type_ii_ms", r.search_ii_ms}}}};
  if (r.type_i) j["type_i"] = to_json(*r.type_i);
  if (r.type_ii) j["type_ii"] = to_json(*r.type_ii);
  if (r.connected) {
    if (r.type_i) j["partitions"]["type_i"] = to_json(partition_view(g, *r.type_i));
    if (r.type_ii) j["partitions"]["type_ii"] = to_json(partition_view(g, *r.type_ii));
  }
  if (r.structure_i) j["structure"]["type_i"] = to_json(*r.structure_i);
  if (r.structure_ii) j["structure"]["type_ii"] = to_json(*r.structure_ii);
  if (!r.connected) {
    json comps = json::array();
    for (const ComponentReport& c : r.components)
      comps.push_back({{"vertices", c.vertices},
                       {"decomposable", c.decomposable},
                       {"type_i", c.has_type_i},
                       {"type_ii", c.has_type_ii}});
    j["components"] = comps;
  }
  if (oracle) {
    j["oracle"] = {{"checked", oracle->summary.checked},
                   {"general_valid", oracle->summary.general_valid},
                   {"pattern_i", oracle->summary.pattern_i},
                   {"pattern_ii", oracle->summary.pattern_ii},
                   {"agrees_type_i", oracle->agrees_type_i},
                   {"agrees_type_ii", oracle->agrees_type_ii},
                   {"pattern_reduction_holds", oracle->pattern_reduction_holds}};
  }
  return j;
}

}  // namespace edgepoly
