#include "edgepoly/edgelist_io.hpp"

#include <fstream>
#include <sstream>

namespace edgepoly {

namespace {

// Next content line, with blank and '#' comment lines skipped.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw InputError("edge list: missing header line");
  std::istringstream hs(line);
  long long d = 0, m = 0;
  std::string extra;
  if (!(hs >> d >> m) || (hs >> extra)) throw InputError("edge list: header must be 'd m'");
  if (d < 1) throw InputError("edge list: vertex count must be >= 1");
  if (m < 0) throw InputError("edge list: negative edge count");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(m));
  for (long long k = 0; k < m; ++k) {
    if (!next_data_line(in, line))
      throw InputError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(k));
    std::istringstream es(line);
    long long u = 0, v = 0;
    if (!(es >> u >> v) || (es >> extra)) throw InputError("edge list: bad edge line '" + line + "'");
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_data_line(in, line)) throw InputError("edge list: trailing content '" + line + "'");
  return Graph::from_edge_list(static_cast<int>(d), pairs);
}

Graph parse_edge_list_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

void save_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << write_edge_list(g);
}

}  // namespace edgepoly
