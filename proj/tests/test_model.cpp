#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "cprk/model.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cprk;

namespace {

std::vector<std::int32_t> ids(const CircularDrawing& d) {
  std::vector<std::int32_t> out;
  out.reserve(d.order.size());
  for (const Vertex& v : d.order) out.push_back(v.id);
  return out;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_NOTHROW(validate_spec({1, 1}));
  CHECK_THROWS_AS(validate_spec({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_spec({3, -1}), std::invalid_argument);
}

TEST_CASE("profile validation") {
  CHECK_NOTHROW(validate_profile({2, 3}, ArcProfile{{1, 1}, {0, 3}}));
  CHECK_THROWS_AS(validate_profile(ArcProfile{{}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_profile(ArcProfile{{1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_profile(ArcProfile{{-1, 2}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_profile({2, 3}, ArcProfile{{1, 1}, {1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_profile({2, 3}, ArcProfile{{2, 1}, {1, 2}}),
                  std::invalid_argument);
}

TEST_CASE("graph validation") {
  GraphSpec triangle{3, {{0, 1}, {1, 2}, {2, 0}}, {}};
  CHECK_NOTHROW(validate_graph(triangle));
  CHECK_THROWS_AS(validate_graph(GraphSpec{0, {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_graph(GraphSpec{2, {{0, 0}}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_graph(GraphSpec{2, {{0, 2}}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_graph(GraphSpec{3, {{0, 1}, {1, 0}}, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_graph(GraphSpec{3, {{0, 1}}, {0, 1}}),
                  std::invalid_argument);
  triangle.partition = {0, 0, 1};
  CHECK_NOTHROW(validate_graph(triangle));
}

TEST_CASE("complete bipartite construction") {
  const GraphSpec g = complete_bipartite(2, 3);
  CHECK(g.vertex_count == 5);
  CHECK(g.edges.size() == 6);
  CHECK(g.partition == std::vector<std::int32_t>{0, 0, 1, 1, 1});
  for (auto [u, v] : g.edges) {
    CHECK(u < 2);
    CHECK(v >= 2);
  }
  CHECK_NOTHROW(validate_graph(g));
}

TEST_CASE("bipartite class detection") {
  const GraphSpec g = complete_bipartite(2, 3);
  const auto classes = complete_bipartite_classes(g);
  REQUIRE(classes.has_value());
  CHECK(classes->first == std::vector<std::int32_t>{0, 1});
  CHECK(classes->second == std::vector<std::int32_t>{2, 3, 4});

  GraphSpec unlabeled = g;
  unlabeled.partition.clear();
  CHECK_FALSE(complete_bipartite_classes(unlabeled).has_value());

  GraphSpec missing_edge = g;
  missing_edge.edges.pop_back();
  CHECK_FALSE(complete_bipartite_classes(missing_edge).has_value());

  GraphSpec three_parts = g;
  three_parts.partition = {0, 0, 1, 1, 2};
  CHECK_FALSE(complete_bipartite_classes(three_parts).has_value());

  // Same edge count as complete bipartite on the labels, but one edge inside
  // a class.
  GraphSpec within{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}, {0, 0, 1, 1}};
  CHECK_FALSE(complete_bipartite_classes(within).has_value());
}

TEST_CASE("profile to drawing layouts") {
  SUBCASE("single pair of arcs") {
    const CircularDrawing d = profile_to_drawing({2, 2}, {{2}, {2}});
    CHECK(ids(d) == std::vector<std::int32_t>{0, 1, 2, 3});
    CHECK(d.arcs.size() == 2);
  }
  SUBCASE("unit arcs") {
    const CircularDrawing d = profile_to_drawing({2, 2}, {{1, 1}, {1, 1}});
    CHECK(ids(d) == std::vector<std::int32_t>{0, 2, 1, 3});
    CHECK(d.arcs.size() == 4);
  }
  SUBCASE("uneven arcs") {
    const CircularDrawing d = profile_to_drawing({3, 3}, {{2, 1}, {2, 1}});
    CHECK(ids(d) == std::vector<std::int32_t>{0, 1, 3, 4, 2, 5});
  }
  SUBCASE("arc purity and coverage") {
    const CircularDrawing d = profile_to_drawing({3, 4}, {{2, 0, 1}, {0, 3, 1}});
    std::int32_t covered = 0;
    for (const ArcSegment& arc : d.arcs) {
      CHECK(arc.first == covered);
      covered += arc.count;
      for (std::int32_t i = 0; i < arc.count; ++i) {
        CHECK(d.order[static_cast<std::size_t>(arc.first + i)].color == arc.color);
      }
    }
    CHECK(covered == 7);
    CHECK(d.arcs.size() == 6);
  }
  SUBCASE("sum mismatch rejected") {
    CHECK_THROWS_AS(profile_to_drawing({2, 2}, {{1, 1}, {1, 2}}),
                    std::invalid_argument);
  }
}

TEST_CASE("canonical profile") {
  SUBCASE("k=1 fixed point") {
    const ArcProfile p{{5}, {7}};
    CHECK(canonical_profile(p) == p);
  }
  SUBCASE("already least") {
    const ArcProfile p{{1, 2}, {1, 2}};
    CHECK(canonical_profile(p) == p);
  }
  SUBCASE("rotation equivalence") {
    const ArcProfile a{{2, 1, 1}, {1, 1, 2}};
    const ArcProfile b{{1, 1, 2}, {1, 2, 1}};
    CHECK(canonical_profile(a) == canonical_profile(b));
  }
  SUBCASE("reflection equivalence") {
    // Reflecting the circle reverses the arc sequence.
    const ArcProfile a{{3, 1, 0}, {2, 2, 1}};
    const ArcProfile reflected{{3, 0, 1}, {1, 2, 2}};
    CHECK(canonical_profile(a) == canonical_profile(reflected));
  }
  SUBCASE("idempotent and orbit-constant") {
    for (const auto& pink : testing::compositions(4, 3)) {
      for (const auto& black : testing::compositions(3, 3)) {
        const ArcProfile p{pink, black};
        const ArcProfile canon = canonical_profile(p);
        CHECK(canonical_profile(canon) == canon);
        CHECK_FALSE(p < canon);
        // Every pair rotation lands on the same canonical form.
        for (std::size_t r = 1; r < 3; ++r) {
          ArcProfile rotated;
          for (std::size_t i = 0; i < 3; ++i) {
            rotated.pink.push_back(p.pink[(i + r) % 3]);
            rotated.black.push_back(p.black[(i + r) % 3]);
          }
          CHECK(canonical_profile(rotated) == canon);
        }
        // As does the reflection.
        ArcProfile reflected;
        for (std::size_t i = 0; i < 3; ++i) {
          reflected.pink.push_back(p.pink[(3 - i) % 3]);
          reflected.black.push_back(p.black[2 - i]);
        }
        CHECK(canonical_profile(reflected) == canon);
      }
    }
  }
}
