#include "cprk/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cprk/chords.hpp"
#include "cprk/model.hpp"

namespace cprk {
namespace {

void check_budget(const GraphSpec& graph, const OracleConfig& config) {
  if (config.max_vertices < 1) {
    throw std::invalid_argument("oracle vertex budget must be >= 1");
  }
  if (graph.vertex_count > config.max_vertices) {
    throw BudgetError("graph has " + std::to_string(graph.vertex_count) +
                      " vertices, over the oracle budget of " +
                      std::to_string(config.max_vertices) +
                      "; raise max_vertices to search anyway");
  }
}

std::vector<std::int32_t> effective_partition(const GraphSpec& graph) {
  if (!graph.partition.empty()) return graph.partition;
  std::vector<std::int32_t> singletons(graph.vertex_count);
  std::iota(singletons.begin(), singletons.end(), 0);
  return singletons;
}

/// Maximal constant-label runs around the cycle (1 when all labels agree).
template <typename Label>
std::int64_t cyclic_runs(const std::vector<Label>& labels) {
  const std::size_t p = labels.size();
  if (p <= 1) return static_cast<std::int64_t>(p);
  std::int64_t breaks = 0;
  for (std::size_t i = 0; i < p; ++i) {
    if (labels[i] != labels[(i + 1) % p]) ++breaks;
  }
  return breaks == 0 ? 1 : breaks;
}

/// Minimum of count_crossings over cyclic orders passing `keep`.  With dedup,
/// vertex 0 stays in front (rotations) and orders whose second entry exceeds
/// their last are skipped (reflections); both maps preserve crossings and
/// run counts.  crossings stays -1 when nothing passes.
template <typename Keep>
OracleResult search_orders(const GraphSpec& graph, const OracleConfig& config,
                           Keep&& keep) {
  const std::int32_t p = graph.vertex_count;
  std::vector<std::int32_t> order(static_cast<std::size_t>(p));
  std::iota(order.begin(), order.end(), 0);
  OracleResult best;
  best.crossings = -1;
  const auto consider = [&](const std::vector<std::int32_t>& candidate) {
    if (!keep(candidate)) return;
    const std::int64_t crossings = count_crossings(candidate, graph);
    if (best.crossings < 0 || crossings < best.crossings) {
      best.crossings = crossings;
      best.order = candidate;
    }
  };
  if (config.dedup_symmetry) {
    do {
      if (p >= 3 && order[1] > order[static_cast<std::size_t>(p) - 1]) continue;
      consider(order);
    } while (std::next_permutation(order.begin() + 1, order.end()));
  } else {
    do {
      consider(order);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return best;
}

/// Complete bipartite fast path: only the color pattern matters, so place
/// class members in ascending id order and enumerate patterns.  With dedup,
/// position 0 always holds vertex 0's class (a rotation can arrange that).
OracleResult search_patterns(const GraphSpec& graph,
                             const BipartiteClasses& classes, std::int64_t k,
                             const OracleConfig& config) {
  const auto p = static_cast<std::size_t>(graph.vertex_count);
  const std::size_t a = classes.first.size();
  OracleResult best;
  best.crossings = -1;
  std::vector<std::int32_t> order(p);
  const auto consider = [&](const std::vector<char>& first_class) {
    if (cyclic_runs(first_class) > k) return;
    std::size_t next_first = 0;
    std::size_t next_second = 0;
    for (std::size_t pos = 0; pos < p; ++pos) {
      order[pos] = first_class[pos] ? classes.first[next_first++]
                                    : classes.second[next_second++];
    }
    const std::int64_t crossings = count_crossings(order, graph);
    if (best.crossings < 0 || crossings < best.crossings) {
      best.crossings = crossings;
      best.order = order;
    }
  };
  // prev_permutation walks every arrangement of the 1/0 mask exactly once.
  if (config.dedup_symmetry) {
    std::vector<char> mask(p - 1, 0);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(a) - 1, 1);
    std::vector<char> full(p, 1);
    do {
      std::copy(mask.begin(), mask.end(), full.begin() + 1);
      consider(full);
    } while (std::prev_permutation(mask.begin(), mask.end()));
  } else {
    std::vector<char> mask(p, 0);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(a), 1);
    do {
      consider(mask);
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return best;
}

}  // namespace

OracleResult brute_force_outerplanar(const GraphSpec& graph,
                                     const OracleConfig& config) {
  validate_graph(graph);
  check_budget(graph, config);
  return search_orders(graph, config,
                       [](const std::vector<std::int32_t>&) { return true; });
}

OracleResult brute_force_cpr(const GraphSpec& graph, std::int64_t k,
                             const OracleConfig& config) {
  validate_graph(graph);
  if (k < 1) throw std::invalid_argument("arc count k must be >= 1");
  if (k > graph.vertex_count) {
    throw std::invalid_argument("arc count k exceeds the vertex count");
  }
  check_budget(graph, config);
  OracleResult best;
  if (const auto classes = complete_bipartite_classes(graph)) {
    best = search_patterns(graph, *classes, k, config);
  } else {
    const std::vector<std::int32_t> labels = effective_partition(graph);
    std::vector<std::int32_t> order_labels(static_cast<std::size_t>(graph.vertex_count));
    best = search_orders(graph, config, [&](const std::vector<std::int32_t>& order) {
      for (std::size_t i = 0; i < order.size(); ++i) {
        order_labels[i] = labels[static_cast<std::size_t>(order[i])];
      }
      return cyclic_runs(order_labels) <= k;
    });
  }
  if (best.crossings < 0) {
    throw std::invalid_argument("no cyclic order fits into " + std::to_string(k) +
                                " same-part arcs");
  }
  return best;
}

}  // namespace cprk
