#include "pgmd/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "pgmd/errors.hpp"

namespace pgmd {

std::string write_edge_list(const SimpleGraph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

SimpleGraph read_edge_list(std::istream& in, const std::string& source_name) {
  std::string line;
  int lineno = 0;
  int n = -1;
  SimpleGraph g;
  while (std::getline(in, line)) {
    ++lineno;
    std::stringstream ss(line);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (n < 0) {
      char p = 0;
      if (!(ss >> p) || p != 'p' || !(ss >> n) || n < 0)
        throw ParseError("'" + source_name + "', line " + std::to_string(lineno) +
                         ": expected header 'p <vertex_count>'");
      g = SimpleGraph(n);
      continue;
    }
    int u = 0, v = 0;
    if (!(ss >> u >> v))
      throw ParseError("'" + source_name + "', line " + std::to_string(lineno) +
                       ": expected 'u v' edge");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("'" + source_name + "', line " + std::to_string(lineno) +
                       ": vertex out of range (graph has " + std::to_string(n) +
                       " vertices)");
    if (u == v)
      throw ParseError("'" + source_name + "', line " + std::to_string(lineno) +
                       ": self-loop rejected");
    g.add_edge(u, v);
  }
  if (n < 0)
    throw ParseError("'" + source_name + "': missing 'p <vertex_count>' header");
  return g;
}

SimpleGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return read_edge_list(in, path);
}

std::string write_dot(const SimpleGraph& g,
                      const std::vector<std::string>& labels) {
  std::string out = "graph pgmd {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v);
    if (!labels.empty()) out += " [label=\"" + labels[v] + "\"]";
    out += ";\n";
  }
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace pgmd
