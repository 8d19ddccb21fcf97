#pragma once

#include <span>

#include "cprk/types.hpp"

namespace cprk {

/// True iff chord {a,b} crosses chord {c,d}, the four arguments being
/// pairwise distinct positions in one cyclic order.  Two chords cross
/// exactly when one of c, d lies strictly inside the arc from a to b and the
/// other does not.  Throws std::invalid_argument on duplicated positions.
bool chords_cross(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// Number of unordered edge pairs whose chords cross when the graph's
/// vertices are placed on a circle in the given cyclic order.  Edge pairs
/// sharing an endpoint never cross (straight chords from a common point).
/// `order` must be a permutation of the graph's vertex ids.
std::int64_t count_crossings(std::span<const std::int32_t> order, const GraphSpec& graph);

/// Same, reading the cyclic order from a circular drawing.
std::int64_t count_crossings(const CircularDrawing& drawing, const GraphSpec& graph);

}  // namespace cprk
