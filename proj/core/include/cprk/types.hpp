#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cprk {

enum class Color : std::uint8_t { Pink, Black };

inline Color other(Color c) { return c == Color::Pink ? Color::Black : Color::Pink; }

struct Vertex {
  std::int32_t id = 0;
  Color color = Color::Pink;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// K_{m,n}: pink part of size m, black part of size n.
struct CompleteBipartiteSpec {
  std::int64_t m = 1;
  std::int64_t n = 1;

  friend bool operator==(const CompleteBipartiteSpec&, const CompleteBipartiteSpec&) = default;
};

/// Arc occupancies of the alternating pattern M1 N1 M2 N2 ... Mk Nk.
/// pink[i] is the number of vertices in the i-th pink arc, black[i] the
/// number in the i-th black arc.  Zero entries (empty arcs) are allowed, so
/// every alternating drawing on at most 2k arcs has a k-pair profile.
struct ArcProfile {
  std::vector<std::int64_t> pink;
  std::vector<std::int64_t> black;

  /// The k in "2k arcs".
  std::size_t arc_pairs() const { return pink.size(); }

  friend bool operator==(const ArcProfile&, const ArcProfile&) = default;

  // Lexicographic on the interleaved sequence (pink[0], black[0], pink[1], ...).
  friend bool operator<(const ArcProfile& a, const ArcProfile& b) {
    const std::size_t ka = a.pink.size();
    const std::size_t kb = b.pink.size();
    for (std::size_t i = 0; i < ka && i < kb; ++i) {
      if (a.pink[i] != b.pink[i]) return a.pink[i] < b.pink[i];
      if (a.black[i] != b.black[i]) return a.black[i] < b.black[i];
    }
    return ka < kb;
  }
};

/// A maximal-by-construction segment of consecutive circle positions holding
/// vertices of a single color.  count may be zero.
struct ArcSegment {
  Color color = Color::Pink;
  std::int32_t first = 0;
  std::int32_t count = 0;
};

/// Vertices on a circle in counterclockwise order, partitioned into
/// consecutive single-color arcs that cover the whole cycle.
struct CircularDrawing {
  std::vector<Vertex> order;
  std::vector<ArcSegment> arcs;
};

/// Plain vertex/edge list for the brute-force paths.  partition, when
/// non-empty, assigns a part label to every vertex; an empty partition means
/// every vertex is its own part.
struct GraphSpec {
  std::int32_t vertex_count = 0;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  std::vector<std::int32_t> partition;
};

/// Thrown when an enumeration would exceed the configured vertex budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cprk
