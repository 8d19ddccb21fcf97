#pragma once

#include <cstdint>
#include <vector>

#include "cprk/formulas.hpp"
#include "cprk/types.hpp"

namespace cprk {

/// One representative per rotation/reflection orbit of pairs of compositions
/// of m and n into k non-negative parts (empty arcs included), in lexicographic
/// order.  Size grows as C(m+k-1,k-1)*C(n+k-1,k-1)/(~2k); intended for the
/// exhaustive optimizer and tests, not for large m, n.
std::vector<ArcProfile> enumerate_profiles(std::int64_t m, std::int64_t n,
                                           std::int64_t k);

struct SeparationMax {
  std::int64_t value = 0;
  std::vector<ArcProfile> argmax;  ///< every canonical optimum, ascending
};

/// Maximum of noncrossing_quadruples over all k-arc profiles of K_{m,n},
/// with the full list of canonical profiles attaining it.
SeparationMax max_noncrossing_quadruples(std::int64_t m, std::int64_t n,
                                         std::int64_t k);

/// Same maximum via branch and bound on partial profiles; returns the value
/// only.  Scales well past the exhaustive search and is cross-checked against
/// it in the test suite.
std::int64_t max_noncrossing_quadruples_pruned(std::int64_t m, std::int64_t n,
                                               std::int64_t k);

/// Canonical profiles whose pink counts are all floor(m/k) or ceil(m/k) and
/// black counts all floor(n/k) or ceil(n/k).  Distinct arrangements of the
/// same balanced multisets can score differently for k >= 3.
std::vector<ArcProfile> balanced_profiles(std::int64_t m, std::int64_t n,
                                          std::int64_t k);

struct CprResult {
  CompleteBipartiteSpec spec;
  std::int64_t requested_k = 0;  ///< K as asked
  std::int64_t effective_k = 0;  ///< even, capped at 2*min(m,n)
  std::int64_t value = 0;        ///< exact minimum crossing count
  std::vector<ArcProfile> witnesses;  ///< canonical optimal profiles, ascending
  RationalBound lower_bound;     ///< bound at k = effective_k / 2
};

/// Exact minimum crossings of K_{m,n} over circular drawings with at most K
/// arcs of same-class vertices.  Odd K reduces to K-1; K past 2*min(m,n) is
/// capped there (the value has stabilized).  Requires 2 <= K <= m+n.
CprResult cpr_exact(std::int64_t m, std::int64_t n, std::int64_t K);

}  // namespace cprk
