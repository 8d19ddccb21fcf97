#include "cprk/formulas.hpp"

#include <stdexcept>
#include <string>

#include "cprk/checked.hpp"
#include "cprk/model.hpp"

namespace cprk {
namespace {

__int128 binom2(__int128 x) { return x * (x - 1) / 2; }

}  // namespace

std::int64_t binom(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0) throw std::invalid_argument("binom requires nonnegative arguments");
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    // Exact at every step: result * (n - r + i) is divisible by i.
    result = checked_mul(result, n - r + i) / i;
  }
  return result;
}

std::int64_t outerplanar_crossings(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("outerplanar_crossings requires m, n >= 1");
  if (n % m != 0) {
    throw std::invalid_argument("outerplanar_crossings requires m to divide n (got m=" +
                                std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  const __int128 mm = m;
  const __int128 nn = n;
  const __int128 value = nn * (mm - 1) * (2 * mm * nn - 3 * mm - nn) / 12;
  return checked_narrow(value);
}

RationalBound cpr_lower_bound(std::int64_t m, std::int64_t n, std::int64_t k) {
  if (m < 1 || n < 1 || k < 1) {
    throw std::invalid_argument("cpr_lower_bound requires m, n, k >= 1");
  }
  const __int128 complete = binom2(m) * binom2(n);
  const __int128 k2 = static_cast<__int128>(k) * k;
  const __int128 k4 = k2 * k2;
  const __int128 den = 12 * k4;
  const __int128 num =
      complete * den - (k4 - k2) * m * m * static_cast<__int128>(n) * n;
  RationalBound bound;
  bound.exact = detail::reduce_to_rational(num, den);
  bound.ceiling = bound.exact.ceil();
  return bound;
}

std::vector<std::pair<std::int64_t, std::int64_t>> separated_pairs(
    std::int64_t i, std::int64_t j, std::int64_t k) {
  if (!(0 <= i && i < j && j < k)) {
    throw std::invalid_argument("separated_pairs requires 0 <= i < j < k");
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  pairs.reserve(static_cast<std::size_t>((j - i) * (k - (j - i))));
  for (std::int64_t s = i; s < j; ++s) {
    for (std::int64_t t = j; t < k; ++t) pairs.emplace_back(s, t);
    for (std::int64_t t = 0; t < i; ++t) pairs.emplace_back(s, t);
  }
  return pairs;
}

std::int64_t noncrossing_quadruples(const ArcProfile& profile) {
  validate_profile(profile);
  const std::size_t k = profile.pink.size();
  // prefix[i] = number of black vertices on arcs 0..i-1.
  std::vector<__int128> prefix(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] + profile.black[i];
  const __int128 total_black = prefix[k];
  __int128 sum = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const __int128 between = prefix[j] - prefix[i];
      sum += static_cast<__int128>(profile.pink[i]) * profile.pink[j] * between *
             (total_black - between);
    }
  }
  return checked_narrow(sum);
}

std::int64_t profile_crossings(const CompleteBipartiteSpec& spec,
                               const ArcProfile& profile) {
  validate_profile(spec, profile);
  const __int128 complete = binom2(spec.m) * binom2(spec.n);
  return checked_narrow(complete - noncrossing_quadruples(profile));
}

std::int64_t cpr4_closed_form(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("cpr4_closed_form requires m, n >= 1");
  const __int128 complete = binom2(m) * binom2(n);
  const __int128 split = static_cast<__int128>((m + 1) / 2) * (m / 2) *
                         ((n + 1) / 2) * (n / 2);
  return checked_narrow(complete - split);
}

}  // namespace cprk
