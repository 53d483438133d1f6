// Command-line front end: analyze, generate, verify, sweep.
// Machine-readable JSON goes to stdout, human-readable notes to stderr.
// Exit codes: 0 = decomposable / valid / clean sweep, 1 = the negative
// outcome, 2 = usage or input error.

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <sstream>

#include "edgepoly/edgelist_io.hpp"
#include "edgepoly/families.hpp"
#include "edgepoly/json_io.hpp"

namespace ep = edgepoly;
using nlohmann::json;

namespace {

constexpr int kExitError = 2;

ep::Weighting parse_weights(const std::string& csv) {
  ep::Weighting a;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw ep::InputError("empty weight entry");
    tok = tok.substr(b, e - b + 1);
    if (tok == "-1") a.push_back(-1);
    else if (tok == "0") a.push_back(0);
    else if (tok == "1" || tok == "+1") a.push_back(1);
    else throw ep::InputError("weight '" + tok + "' is not one of -1, 0, 1");
  }
  if (a.empty()) throw ep::InputError("no weights given");
  return a;
}

ep::Edge parse_edge_flag(const std::string& s) {
  size_t comma = s.find(',');
  if (comma == std::string::npos) throw ep::InputError("--edge expects 'u,v'");
  int u = std::stoi(s.substr(0, comma));
  int v = std::stoi(s.substr(comma + 1));
  return ep::Edge(u, v);
}

int run_analyze(const std::string& file, bool oracle, int jobs, int max_oracle_d) {
  ep::Graph g = ep::load_edge_list_file(file);
  ep::AnalysisReport rep = ep::decide(g);
  std::unique_ptr<ep::OracleCrossCheck> cross;
  if (oracle) {
    if (!rep.connected) throw ep::InputError("--oracle requires a connected graph");
    ep::OracleOptions oo;
    oo.max_vertices = max_oracle_d;
    oo.jobs = jobs;
    auto entries = ep::brute_force_certificates(g, oo);
    cross = std::make_unique<ep::OracleCrossCheck>();
    for (const auto& ent : entries) {
      ++cross->summary.general_valid;
      if (ent.pattern == ep::Pattern::TypeI) ++cross->summary.pattern_i;
      if (ent.pattern == ep::Pattern::TypeII) ++cross->summary.pattern_ii;
    }
    std::uint64_t total = 1;
    for (int i = 0; i < g.vertex_count(); ++i) total *= 3;
    cross->summary.checked = total;
    cross->agrees_type_i = cross->summary.has_type_i() == rep.type_i.has_value();
    cross->agrees_type_ii = cross->summary.has_type_ii() == rep.type_ii.has_value();
    cross->pattern_reduction_holds =
        !cross->summary.has_general_valid() || cross->summary.has_type_i() || cross->summary.has_type_ii();
    if (!cross->agrees_type_i || !cross->agrees_type_ii)
      std::cerr << "warning: search and oracle disagree\n";
  }
  std::cout << ep::report_to_json(g, rep, cross.get()).dump(2) << '\n';
  std::cerr << (rep.decomposable ? "decomposable" : "indecomposable") << '\n';
  return rep.decomposable ? 0 : 1;
}

int run_generate(const std::string& family, const std::vector<std::string>& params,
                 const std::string& edge_flag, const std::string& out) {
  auto numeric = [&]() {
    std::vector<int> sizes;
    for (const std::string& p : params) {
      try {
        size_t used = 0;
        sizes.push_back(std::stoi(p, &used));
        if (used != p.size()) throw std::invalid_argument(p);
      } catch (const std::exception&) {
        throw ep::InputError("size parameter '" + p + "' is not an integer");
      }
    }
    return sizes;
  };
  auto one_size = [&]() {
    auto sizes = numeric();
    if (sizes.size() != 1)
      throw ep::InputError("family '" + family + "' expects exactly one size parameter");
    return sizes[0];
  };
  ep::Graph g;
  if (family == "complete") {
    g = ep::complete_graph(one_size());
  } else if (family == "multipartite") {
    auto sizes = numeric();
    if (sizes.empty()) throw ep::InputError("multipartite expects part sizes");
    g = ep::complete_multipartite(sizes);
  } else if (family == "cycle") {
    g = ep::cycle_graph(one_size());
  } else if (family == "path") {
    g = ep::path_graph(one_size());
  } else if (family == "tripan") {
    g = ep::tri_pan(one_size());
  } else if (family == "attach") {
    if (params.size() != 1) throw ep::InputError("attach expects a base graph file");
    if (edge_flag.empty()) throw ep::InputError("attach expects --edge u,v");
    g = ep::attach_four_cycle(ep::load_edge_list_file(params[0]), parse_edge_flag(edge_flag));
  } else {
    throw ep::InputError("unknown family '" + family + "'");
  }
  if (out.empty() || out == "-")
    std::cout << ep::write_edge_list(g);
  else {
    ep::save_edge_list_file(g, out);
    std::cerr << "wrote " << g.vertex_count() << " vertices, " << g.edge_count() << " edges to " << out << '\n';
  }
  return 0;
}

int run_verify(const std::string& file, const std::string& weights_csv) {
  ep::Graph g = ep::load_edge_list_file(file);
  ep::Weighting a = parse_weights(weights_csv);
  ep::SeparationCheck c = ep::check_separating(g, a);

  json signs = json::array();
  for (const ep::EdgeSign& es : ep::edge_signs(g, a))
    signs.push_back({{"edge", {es.edge.u, es.edge.v}},
                     {"sign", es.sign},
                     {"signature", {static_cast<int>(es.sig_lo), static_cast<int>(es.sig_hi)}}});
  json j{{"valid", c.pattern.has_value()},
         {"general_valid", c.general_valid},
         {"pattern", c.pattern ? json(ep::pattern_name(*c.pattern)) : json(nullptr)},
         {"positive", c.positive.size()},
         {"negative", c.negative.size()},
         {"zero", c.zero.size()},
         {"signs", signs},
         {"incompatible_pair", nullptr}};
  if (c.incompatible_pair)
    j["incompatible_pair"] = {{c.incompatible_pair->first.u, c.incompatible_pair->first.v},
                              {c.incompatible_pair->second.u, c.incompatible_pair->second.v}};
  std::cout << j.dump(2) << '\n';
  if (c.pattern)
    std::cerr << "valid separating weighting, type " << ep::pattern_name(*c.pattern) << '\n';
  else if (c.general_valid)
    std::cerr << "generally valid but matches neither pattern\n";
  else
    std::cerr << "not a separating weighting\n";
  return c.pattern ? 0 : 1;
}

int run_sweep_cmd(int max_n, bool oracle, int jobs, int max_oracle_d, int cap_n) {
  ep::SweepOptions opts;
  opts.max_n = max_n;
  opts.oracle = oracle;
  opts.jobs = jobs;
  opts.max_oracle_vertices = max_oracle_d;
  opts.cap_n = cap_n;
  ep::SweepSummary sum = jobs == 1 ? ep::run_sweep_serial(opts) : ep::run_sweep(opts);
  std::cout << ep::to_json(sum).dump(2) << '\n';
  for (const ep::SweepRow& r : sum.rows)
    std::cerr << "n=" << r.n << ": " << r.graphs << " graphs, " << r.decomposable << " decomposable ("
              << r.type_i_only << " I-only, " << r.type_ii_only << " II-only, " << r.both << " both)\n";
  if (!sum.violations.empty()) std::cerr << sum.violations.size() << " violation(s)\n";
  if (!sum.findings.empty()) std::cerr << sum.findings.size() << " finding(s)\n";
  return sum.violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge polytope decomposability toolkit"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format (json)")->check(CLI::IsMember({"json"}));

  // analyze
  auto* analyze = app.add_subcommand("analyze", "decide decomposability of an edge-list graph");
  std::string an_file;
  bool an_oracle = false;
  int an_jobs = 0, an_max_oracle = ep::kDefaultOracleMaxVertices;
  analyze->add_option("file", an_file, "edge-list file")->required();
  analyze->add_flag("--oracle", an_oracle, "cross-check the searches against the 3^d scan");
  analyze->add_option("--jobs", an_jobs, "worker threads (0 = all)");
  analyze->add_option("--max-oracle-d", an_max_oracle, "vertex cap for the oracle scan");

  // generate
  auto* generate = app.add_subcommand("generate", "write a named graph family as an edge list");
  std::string gen_family, gen_edge, gen_out;
  std::vector<std::string> gen_params;
  generate->add_option("family", gen_family, "complete|multipartite|cycle|path|tripan|attach")->required();
  generate->add_option("params", gen_params, "size parameters, or the base graph file for attach");
  generate->add_option("--edge", gen_edge, "attachment edge 'u,v' (attach)");
  generate->add_option("-o,--out", gen_out, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "check a proposed weighting against a graph");
  std::string ver_file, ver_weights;
  verify->add_option("file", ver_file, "edge-list file")->required();
  verify->add_option("weights", ver_weights, "comma-separated weights in {-1,0,1}, one per vertex")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "exhaustively check all connected graphs up to a size");
  int sw_max_n = 0, sw_jobs = 0, sw_max_oracle = ep::kDefaultOracleMaxVertices,
      sw_cap = ep::kDefaultEnumerationCap;
  bool sw_oracle = false;
  sweep->add_option("max_n", sw_max_n, "largest vertex count to enumerate")->required();
  sweep->add_flag("--oracle", sw_oracle, "also compare against the 3^d scan per graph");
  sweep->add_option("--jobs", sw_jobs, "worker threads (0 = all, 1 = serial reference)");
  sweep->add_option("--max-oracle-d", sw_max_oracle, "vertex cap for the oracle scan");
  sweep->add_option("--max-sweep-n", sw_cap, "enumeration cap (default 7)");

  try {
    app.parse(argc, argv);
    if (analyze->parsed()) return run_analyze(an_file, an_oracle, an_jobs, an_max_oracle);
    if (generate->parsed()) return run_generate(gen_family, gen_params, gen_edge, gen_out);
    if (verify->parsed()) return run_verify(ver_file, ver_weights);
    if (sweep->parsed()) return run_sweep_cmd(sw_max_n, sw_oracle, sw_jobs, sw_max_oracle, sw_cap);
    return kExitError;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
