#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cprk/rational.hpp"
#include "cprk/types.hpp"

namespace cprk {

/// Exact binomial coefficient; 0 when r > n, throws std::invalid_argument on
/// negative input and std::overflow_error if the value leaves 64-bit range.
std::int64_t binom(std::int64_t n, std::int64_t r);

/// Minimum crossings of K_{m,n} over drawings with every vertex on the outer
/// circle and edges inside: n(m-1)(2mn-3m-n)/12.  Requires m >= 1 and m | n.
std::int64_t outerplanar_crossings(std::int64_t m, std::int64_t n);

/// A rational lower bound together with its ceiling (bounds can be negative,
/// so the ceiling is computed with floor-toward-minus-infinity semantics).
struct RationalBound {
  Rational exact;
  std::int64_t ceiling = 0;
};

/// Lower bound on the k-arc circular crossing number of K_{m,n}:
///   C(m,2) C(n,2) - (k^4 - k^2) m^2 n^2 / (12 k^4).
/// Tight exactly when k divides both m and n.  Requires m, n, k >= 1.
RationalBound cpr_lower_bound(std::int64_t m, std::int64_t n, std::int64_t k);

/// Arc index pairs (s, t) whose chords to arcs i and j must cross: with k arcs
/// on the circle and 0 <= i < j < k, these are s in [i, j) paired with t in
/// [j, k) or [0, i).  There are (j-i)(k-(j-i)) of them.
std::vector<std::pair<std::int64_t, std::int64_t>> separated_pairs(
    std::int64_t i, std::int64_t j, std::int64_t k);

/// Number of vertex quadruples {p, p'} x {b, b'} whose two chords pp', bb'
/// avoid each other in the drawing described by `profile`:
///   sum over i < j of  m_i m_j * S_ij (n - S_ij)
/// where S_ij is the number of black vertices on arcs i..j-1.
std::int64_t noncrossing_quadruples(const ArcProfile& profile);

/// Crossing count of the alternating-arc drawing of K_{m,n} given by
/// `profile`: C(m,2) C(n,2) minus the avoiding quadruples.  The profile's
/// pink and black totals must equal spec.m and spec.n.
std::int64_t profile_crossings(const CompleteBipartiteSpec& spec,
                               const ArcProfile& profile);

/// Minimum crossings over 4-arc circular drawings of K_{m,n}:
///   C(m,2) C(n,2) - ceil(m/2) floor(m/2) ceil(n/2) floor(n/2).
std::int64_t cpr4_closed_form(std::int64_t m, std::int64_t n);

}  // namespace cprk
