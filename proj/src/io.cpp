#include "pretop/io.hpp"

#include <fstream>
#include <sstream>

namespace pretop {

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  int lineno = 0;
  long long n = -1;
  Graph g;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = clean_line(raw);
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string keyword;
      fields >> keyword >> n;
      if (keyword != "n" || fields.fail() || n < 0)
        throw parse_error(lineno, "expected header 'n <count>'");
      std::string rest;
      if (fields >> rest) throw parse_error(lineno, "trailing tokens after header");
      g = Graph(static_cast<int>(n));
      continue;
    }
    long long u, v;
    fields >> u >> v;
    if (fields.fail()) throw parse_error(lineno, "expected edge 'u v'");
    std::string rest;
    if (fields >> rest) throw parse_error(lineno, "trailing tokens after edge");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error(lineno, "edge endpoint out of range [0," + std::to_string(n) + ")");
    if (u == v) throw parse_error(lineno, "loop edges are not allowed");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw parse_error(lineno == 0 ? 1 : lineno, "empty input: missing 'n <count>' header");
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "n " << g.order() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

void write_dot(const Graph& g, std::ostream& out, const std::string& name) {
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  write_dot(g, out, name);
  return out.str();
}

}  // namespace pretop
