#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cprk/types.hpp"

namespace cprk::tool {

/// Malformed graph file; line is 1-based, 0 when no single line is at fault.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line(line) {}
  int line;
};

/// Reads the edge-list format: a header line "p q" (vertex and edge counts),
/// q lines "u v" with 0-based endpoints, then optional lines "part u label"
/// assigning partition labels.  Labels must cover all vertices or none.
/// Blank lines and lines starting with '#' are skipped.
GraphSpec parse_graph(std::istream& in);

/// Same, from a file path.  Throws ParseError on unreadable files too.
GraphSpec parse_graph_file(const std::string& path);

}  // namespace cprk::tool
