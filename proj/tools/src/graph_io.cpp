#include "graph_io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

#include "cprk/model.hpp"

namespace cprk::tool {
namespace {

/// Advances to the next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    return true;
  }
  return false;
}

void reject_trailing(std::istringstream& in, int line_no) {
  std::string extra;
  if (in >> extra) throw ParseError(line_no, "unexpected trailing token \"" + extra + "\"");
}

}  // namespace

GraphSpec parse_graph(std::istream& in) {
  int line_no = 0;
  std::string line;
  if (!next_content_line(in, line, line_no)) {
    throw ParseError(0, "empty graph file");
  }
  std::int64_t p = 0;
  std::int64_t q = 0;
  {
    std::istringstream header(line);
    if (!(header >> p >> q)) throw ParseError(line_no, "expected header \"p q\"");
    reject_trailing(header, line_no);
  }
  if (p < 1 || p > std::numeric_limits<std::int32_t>::max()) {
    throw ParseError(line_no, "vertex count out of range");
  }
  if (q < 0) throw ParseError(line_no, "edge count must be >= 0");

  GraphSpec graph;
  graph.vertex_count = static_cast<std::int32_t>(p);
  std::set<std::pair<std::int32_t, std::int32_t>> seen;
  for (std::int64_t i = 0; i < q; ++i) {
    if (!next_content_line(in, line, line_no)) {
      throw ParseError(0, "expected " + std::to_string(q) + " edge lines, found " +
                              std::to_string(i));
    }
    std::istringstream edge(line);
    std::int64_t u = 0;
    std::int64_t v = 0;
    if (!(edge >> u >> v)) throw ParseError(line_no, "expected edge \"u v\"");
    reject_trailing(edge, line_no);
    if (u < 0 || v < 0 || u >= p || v >= p) {
      throw ParseError(line_no, "edge endpoint out of range");
    }
    if (u == v) throw ParseError(line_no, "loop edge " + std::to_string(u));
    const std::pair<std::int32_t, std::int32_t> key{
        static_cast<std::int32_t>(std::min(u, v)),
        static_cast<std::int32_t>(std::max(u, v))};
    if (!seen.insert(key).second) throw ParseError(line_no, "duplicate edge");
    graph.edges.emplace_back(static_cast<std::int32_t>(u), static_cast<std::int32_t>(v));
  }

  std::vector<std::int32_t> labels(static_cast<std::size_t>(p), 0);
  std::vector<bool> labeled(static_cast<std::size_t>(p), false);
  bool any_label = false;
  while (next_content_line(in, line, line_no)) {
    std::istringstream part(line);
    std::string keyword;
    std::int64_t u = 0;
    std::int64_t label = 0;
    if (!(part >> keyword >> u >> label) || keyword != "part") {
      throw ParseError(line_no, "expected \"part u label\"");
    }
    reject_trailing(part, line_no);
    if (u < 0 || u >= p) throw ParseError(line_no, "vertex out of range");
    if (label < std::numeric_limits<std::int32_t>::min() ||
        label > std::numeric_limits<std::int32_t>::max()) {
      throw ParseError(line_no, "label out of range");
    }
    if (labeled[static_cast<std::size_t>(u)]) {
      throw ParseError(line_no, "vertex " + std::to_string(u) + " labeled twice");
    }
    labeled[static_cast<std::size_t>(u)] = true;
    labels[static_cast<std::size_t>(u)] = static_cast<std::int32_t>(label);
    any_label = true;
  }
  if (any_label) {
    for (std::int64_t v = 0; v < p; ++v) {
      if (!labeled[static_cast<std::size_t>(v)]) {
        throw ParseError(0, "partition lines must label every vertex; vertex " +
                                std::to_string(v) + " is missing");
      }
    }
    graph.partition = std::move(labels);
  }
  validate_graph(graph);
  return graph;
}

GraphSpec parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_graph(in);
}

}  // namespace cprk::tool
