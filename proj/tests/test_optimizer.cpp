#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>

#include "cprk/formulas.hpp"
#include "cprk/model.hpp"
#include "cprk/optimizer.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cprk;

namespace {

/// Multiset of balanced arc occupancies for total over k arcs.
std::multiset<std::int64_t> balanced_multiset(std::int64_t total, std::int64_t k) {
  std::multiset<std::int64_t> out;
  for (std::int64_t i = 0; i < k; ++i) out.insert(total / k + (i < total % k ? 1 : 0));
  return out;
}

std::multiset<std::int64_t> as_multiset(const std::vector<std::int64_t>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("profile enumeration") {
  SUBCASE("orbit representatives are canonical, distinct and complete") {
    for (std::int64_t m = 1; m <= 4; ++m) {
      for (std::int64_t n = 1; n <= 4; ++n) {
        for (std::int64_t k = 1; k <= 3; ++k) {
          const auto profiles = enumerate_profiles(m, n, k);
          std::set<ArcProfile> seen;
          for (const ArcProfile& p : profiles) {
            CHECK(canonical_profile(p) == p);
            CHECK_NOTHROW(validate_profile({m, n}, p));
            CHECK(seen.insert(p).second);
          }
          // Every raw composition pair reduces to a listed representative.
          for (const auto& pink : testing::compositions(m, k)) {
            for (const auto& black : testing::compositions(n, k)) {
              CHECK(seen.count(canonical_profile({pink, black})) == 1);
            }
          }
          CHECK(std::is_sorted(profiles.begin(), profiles.end()));
        }
      }
    }
  }
  SUBCASE("orbit counts") {
    CHECK(enumerate_profiles(2, 2, 1).size() == 1);
    CHECK(enumerate_profiles(2, 2, 2).size() == 4);
    CHECK(enumerate_profiles(1, 1, 2).size() == 1);
    CHECK(enumerate_profiles(3, 3, 3).size() == 19);
    CHECK(enumerate_profiles(2, 4, 2).size() == 6);
    CHECK(enumerate_profiles(6, 6, 4).size() == 916);
  }
  SUBCASE("input checking") {
    CHECK_THROWS_AS(enumerate_profiles(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_profiles(1, 1, 0), std::invalid_argument);
  }
}

TEST_CASE("maximum avoiding quadruples") {
  SUBCASE("small instances with known optima") {
    const SeparationMax s222 = max_noncrossing_quadruples(2, 2, 2);
    CHECK(s222.value == 1);
    REQUIRE(s222.argmax.size() == 1);
    CHECK(s222.argmax[0] == ArcProfile{{1, 1}, {1, 1}});

    const SeparationMax s332 = max_noncrossing_quadruples(3, 3, 2);
    CHECK(s332.value == 4);
    REQUIRE(s332.argmax.size() == 1);
    CHECK(s332.argmax[0] == ArcProfile{{1, 2}, {1, 2}});

    const SeparationMax s333 = max_noncrossing_quadruples(3, 3, 3);
    CHECK(s333.value == 6);
    REQUIRE(s333.argmax.size() == 1);
    CHECK(s333.argmax[0] == ArcProfile{{1, 1, 1}, {1, 1, 1}});

    CHECK(max_noncrossing_quadruples(4, 4, 3).value == 17);
  }
  SUBCASE("argmax entries really attain the maximum") {
    for (std::int64_t m = 1; m <= 5; ++m) {
      for (std::int64_t n = 1; n <= 5; ++n) {
        for (std::int64_t k = 1; k <= 3; ++k) {
          const SeparationMax result = max_noncrossing_quadruples(m, n, k);
          REQUIRE_FALSE(result.argmax.empty());
          CHECK(std::is_sorted(result.argmax.begin(), result.argmax.end()));
          for (const ArcProfile& p : result.argmax) {
            CHECK(noncrossing_quadruples(p) == result.value);
          }
          for (const ArcProfile& p : enumerate_profiles(m, n, k)) {
            CHECK(noncrossing_quadruples(p) <= result.value);
          }
        }
      }
    }
  }
}

TEST_CASE("branch and bound agrees with exhaustive search") {
  for (std::int64_t m = 1; m <= 6; ++m) {
    for (std::int64_t n = 1; n <= 6; ++n) {
      for (std::int64_t k = 1; k <= 4; ++k) {
        CHECK(max_noncrossing_quadruples_pruned(m, n, k) ==
              max_noncrossing_quadruples(m, n, k).value);
      }
    }
  }
  CHECK(max_noncrossing_quadruples_pruned(7, 7, 5) ==
        max_noncrossing_quadruples(7, 7, 5).value);
}

TEST_CASE("balanced profiles") {
  SUBCASE("uniform when k divides both sides") {
    const auto profiles = balanced_profiles(4, 4, 2);
    REQUIRE(profiles.size() == 1);
    CHECK(profiles[0] == ArcProfile{{2, 2}, {2, 2}});
  }
  SUBCASE("unique arrangement up to symmetry for k=2") {
    const auto profiles = balanced_profiles(3, 3, 2);
    REQUIRE(profiles.size() == 1);
    CHECK(profiles[0] == ArcProfile{{1, 2}, {1, 2}});
  }
  SUBCASE("distinct arrangements for k=3 score differently") {
    const auto profiles = balanced_profiles(4, 4, 3);
    REQUIRE(profiles.size() == 2);
    std::set<std::int64_t> scores;
    for (const ArcProfile& p : profiles) scores.insert(noncrossing_quadruples(p));
    CHECK(scores == std::set<std::int64_t>{16, 17});
  }
  SUBCASE("always canonical with balanced multisets") {
    for (std::int64_t m = 1; m <= 6; ++m) {
      for (std::int64_t n = 1; n <= 6; ++n) {
        for (std::int64_t k = 1; k <= 4; ++k) {
          for (const ArcProfile& p : balanced_profiles(m, n, k)) {
            CHECK(canonical_profile(p) == p);
            CHECK(as_multiset(p.pink) == balanced_multiset(m, k));
            CHECK(as_multiset(p.black) == balanced_multiset(n, k));
          }
        }
      }
    }
  }
}

TEST_CASE("exact optimizer") {
  SUBCASE("known values across K") {
    const std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int64_t>>
        tables = {
            {{2, 2}, {1, 1, 0}},
            {{2, 3}, {3, 3, 1, 1}},
            {{2, 4}, {6, 6, 2, 2, 2}},
            {{3, 3}, {9, 9, 5, 5, 3}},
            {{3, 4}, {18, 18, 10, 10, 8, 8}},
            {{4, 4}, {36, 36, 20, 20, 19, 19, 16}},
        };
    for (const auto& [mn, values] : tables) {
      const auto [m, n] = mn;
      for (std::int64_t K = 2; K <= m + n; ++K) {
        CHECK(cpr_exact(m, n, K).value == values[static_cast<std::size_t>(K - 2)]);
      }
    }
  }
  SUBCASE("result invariants") {
    for (std::int64_t m = 1; m <= 4; ++m) {
      for (std::int64_t n = 1; n <= 4; ++n) {
        for (std::int64_t K = 2; K <= m + n; ++K) {
          const CprResult r = cpr_exact(m, n, K);
          CHECK(r.requested_k == K);
          CHECK(r.effective_k % 2 == 0);
          CHECK(r.effective_k <= 2 * std::min(m, n));
          CHECK(r.lower_bound.exact <= Rational(r.value));
          REQUIRE_FALSE(r.witnesses.empty());
          for (const ArcProfile& w : r.witnesses) {
            CHECK(profile_crossings(r.spec, w) == r.value);
            CHECK(std::ssize(w.pink) == r.effective_k / 2);
          }
          CHECK(cpr_exact(n, m, K).value == r.value);
        }
      }
    }
  }
  SUBCASE("witness reporting picks the least profile first") {
    const CprResult r = cpr_exact(3, 3, 4);
    CHECK(r.value == 5);
    CHECK(r.witnesses.front() == ArcProfile{{1, 2}, {1, 2}});
    const CprResult r244 = cpr_exact(2, 4, 4);
    CHECK(r244.witnesses.front() == ArcProfile{{1, 1}, {2, 2}});
  }
  SUBCASE("parity reduction and stabilization cap") {
    CHECK(cpr_exact(3, 3, 5).effective_k == 4);
    CHECK(cpr_exact(3, 3, 5).value == cpr_exact(3, 3, 4).value);
    CHECK(cpr_exact(2, 4, 6).effective_k == 4);  // capped at 2*min(m,n)
    CHECK(cpr_exact(2, 4, 6).value == cpr_exact(2, 4, 4).value);
  }
  SUBCASE("bound equality exactly when k divides both sides") {
    CHECK(Rational(cpr_exact(2, 4, 4).value) == cpr_exact(2, 4, 4).lower_bound.exact);
    CHECK(Rational(cpr_exact(3, 3, 4).value) != cpr_exact(3, 3, 4).lower_bound.exact);
  }
  SUBCASE("input checking") {
    CHECK_THROWS_AS(cpr_exact(0, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(cpr_exact(2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(cpr_exact(2, 2, 5), std::invalid_argument);
  }
}
