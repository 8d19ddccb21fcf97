#pragma once

#include <cstdint>
#include <vector>

#include "cprk/types.hpp"

namespace cprk {

struct OracleConfig {
  /// Enumeration refuses graphs above this many vertices (BudgetError);
  /// the default keeps the worst case under roughly a million drawings.
  std::int32_t max_vertices = 10;
  /// Skip rotations and reflections of orders already visited.
  bool dedup_symmetry = true;
};

struct OracleResult {
  std::int64_t crossings = 0;
  std::vector<std::int32_t> order;  ///< one optimal cyclic vertex order
};

/// Minimum crossings over every cyclic order of the graph's vertices on a
/// circle, found by exhaustive enumeration.
OracleResult brute_force_outerplanar(const GraphSpec& graph,
                                     const OracleConfig& config = {});

/// Minimum crossings over cyclic orders that can be cut into at most k arcs
/// of same-part vertices (the graph's partition; every vertex its own part
/// when absent).  Complete bipartite inputs take a color-pattern fast path,
/// since their crossing counts ignore the order within an arc.  Throws
/// std::invalid_argument when k exceeds the vertex count or no order fits
/// into k arcs.
OracleResult brute_force_cpr(const GraphSpec& graph, std::int64_t k,
                             const OracleConfig& config = {});

}  // namespace cprk
