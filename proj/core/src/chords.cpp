#include "cprk/chords.hpp"

#include <vector>

#include "cprk/model.hpp"

namespace cprk {

namespace {

// x strictly inside the arc from a to b, walking in increasing cyclic
// direction.  Distinct integer positions share one cyclic order, so no
// modulus is needed.
bool in_arc(std::int64_t a, std::int64_t b, std::int64_t x) {
  return a < b ? (a < x && x < b) : (x > a || x < b);
}

}  // namespace

bool chords_cross(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d) {
    throw std::invalid_argument("chord endpoints must be four distinct positions");
  }
  return in_arc(a, b, c) != in_arc(a, b, d);
}

std::int64_t count_crossings(std::span<const std::int32_t> order, const GraphSpec& graph) {
  validate_graph(graph);
  if (order.size() != static_cast<std::size_t>(graph.vertex_count)) {
    throw std::invalid_argument("drawing and graph have different vertex sets");
  }
  std::vector<std::int32_t> pos(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::int32_t v = order[i];
    if (v < 0 || v >= graph.vertex_count || pos[v] != -1) {
      throw std::invalid_argument("drawing order is not a permutation of the graph's vertices");
    }
    pos[v] = static_cast<std::int32_t>(i);
  }
  std::int64_t crossings = 0;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto [a, b] = graph.edges[e];
    for (std::size_t f = e + 1; f < graph.edges.size(); ++f) {
      const auto [c, d] = graph.edges[f];
      if (a == c || a == d || b == c || b == d) continue;
      if (chords_cross(pos[a], pos[b], pos[c], pos[d])) ++crossings;
    }
  }
  return crossings;
}

std::int64_t count_crossings(const CircularDrawing& drawing, const GraphSpec& graph) {
  std::vector<std::int32_t> order;
  order.reserve(drawing.order.size());
  for (const Vertex& v : drawing.order) order.push_back(v.id);
  return count_crossings(order, graph);
}

}  // namespace cprk
