#pragma once

#include <iosfwd>
#include <string>

#include "pretop/graph.hpp"

namespace pretop {

/// Plain-text edge list: first line `n <count>`, then one `u v` pair per
/// line, 0-based, whitespace-separated; `#` starts a comment. Throws
/// parse_error with the offending line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Canonical form: `n <count>` then edges sorted ascending, one per line,
/// single spaces, trailing newline. Reading canonical output and writing
/// it again is byte-identical.
void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);

void write_dot(const Graph& g, std::ostream& out, const std::string& name = "G");
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace pretop
