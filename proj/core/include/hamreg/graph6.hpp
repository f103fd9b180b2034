#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hamreg/graph.hpp"

namespace hamreg {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Standard graph6 layout: size header, then the upper triangle in column
// order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed big-endian into 6-bit
// groups offset by 63. No trailing newline.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" prefix and a trailing '\n' or "\r\n".
// Throws Graph6Error on a malformed header, characters outside [63, 126], a
// body of the wrong length, or nonzero padding bits.
Graph graph6_decode(std::string_view line);

struct Graph6Diagnostic {
  std::size_t line_number;  // 1-based
  std::string message;
};

struct Graph6Stream {
  std::vector<Graph> graphs;
  std::vector<Graph6Diagnostic> diagnostics;
};

// Reads one graph per line. Blank lines are skipped; malformed lines are
// reported and skipped unless strict is set, in which case the first one
// throws.
Graph6Stream read_graph6(std::istream& in, bool strict = false);

}  // namespace hamreg
