#pragma once

#include <stdexcept>
#include <string>

namespace pretop {

// Bad caller input: out-of-range vertex, mismatched dimensions, invalid
// relation, unknown catalog name.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Instance exceeds a configured bound (enumeration width, exact-solver
// size, truncation vertex cap).
struct size_error : std::length_error {
  using std::length_error::length_error;
};

// Malformed graph file; carries the offending 1-based line number.
struct parse_error : std::runtime_error {
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

}  // namespace pretop
