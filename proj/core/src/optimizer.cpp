#include "cprk/optimizer.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "cprk/checked.hpp"
#include "cprk/model.hpp"

namespace cprk {
namespace {

void check_mnk(std::int64_t m, std::int64_t n, std::int64_t k) {
  if (m < 1 || n < 1 || k < 1) {
    throw std::invalid_argument("profile search requires m, n, k >= 1");
  }
}

/// Calls fn once per way of writing total as k ordered non-negative parts.
void for_each_composition(
    std::int64_t total, std::int64_t k,
    const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> parts(static_cast<std::size_t>(k), 0);
  const std::function<void(std::size_t, std::int64_t)> descend =
      [&](std::size_t idx, std::int64_t remaining) {
        if (idx + 1 == parts.size()) {
          parts[idx] = remaining;
          fn(parts);
          return;
        }
        for (std::int64_t v = 0; v <= remaining; ++v) {
          parts[idx] = v;
          descend(idx + 1, remaining - v);
        }
      };
  descend(0, total);
}

/// total split into k parts, each floor(total/k) or ceil(total/k), ascending.
std::vector<std::int64_t> balanced_parts(std::int64_t total, std::int64_t k) {
  std::vector<std::int64_t> parts(static_cast<std::size_t>(k), total / k);
  for (std::int64_t i = 0; i < total % k; ++i) ++parts[parts.size() - 1 - i];
  return parts;
}

/// Maximizes sum over s < t of W[s][t] b_s b_t over compositions b of n into
/// k non-negative parts, by depth-first search with an admissible bound.
class BlackSearch {
 public:
  BlackSearch(const std::vector<std::vector<std::int64_t>>& weights,
              std::int64_t n, std::int64_t incumbent)
      : weights_(weights),
        k_(weights.size()),
        linear_(weights.size(), 0),
        best_(incumbent) {
    // Largest weight among pairs entirely at or past a given depth.
    suffix_max_.assign(k_ + 1, 0);
    for (std::size_t d = k_; d-- > 0;) {
      std::int64_t row = 0;
      for (std::size_t t = d + 1; t < k_; ++t) row = std::max(row, weights_[d][t]);
      suffix_max_[d] = std::max(suffix_max_[d + 1], row);
    }
    descend(0, n, 0);
  }

  std::int64_t best() const { return best_; }

 private:
  void descend(std::size_t depth, std::int64_t remaining, std::int64_t fixed) {
    if (depth + 1 == k_) {
      best_ = std::max(best_, fixed + linear_[depth] * remaining);
      return;
    }
    if (bound(depth, remaining, fixed) <= best_) return;
    for (std::int64_t v = 0; v <= remaining; ++v) {
      const std::int64_t next_fixed = fixed + linear_[depth] * v;
      for (std::size_t t = depth + 1; t < k_; ++t) {
        linear_[t] += weights_[depth][t] * v;
      }
      descend(depth + 1, remaining - v, next_fixed);
      for (std::size_t t = depth + 1; t < k_; ++t) {
        linear_[t] -= weights_[depth][t] * v;
      }
    }
  }

  /// fixed + best-case linear spillover + best-case pairing of the remaining
  /// mass; never below the true suffix optimum.
  std::int64_t bound(std::size_t depth, std::int64_t remaining,
                     std::int64_t fixed) const {
    std::int64_t max_linear = 0;
    for (std::size_t t = depth; t < k_; ++t) {
      max_linear = std::max(max_linear, linear_[t]);
    }
    const std::int64_t slots = static_cast<std::int64_t>(k_ - depth);
    const std::int64_t sq = remaining * remaining;
    const std::int64_t min_square_sum = (sq + slots - 1) / slots;
    return fixed + max_linear * remaining +
           suffix_max_[depth] * ((sq - min_square_sum) / 2);
  }

  const std::vector<std::vector<std::int64_t>>& weights_;
  std::size_t k_;
  std::vector<std::int64_t> linear_;
  std::vector<std::int64_t> suffix_max_;
  std::int64_t best_;
};

}  // namespace

std::vector<ArcProfile> enumerate_profiles(std::int64_t m, std::int64_t n,
                                           std::int64_t k) {
  check_mnk(m, n, k);
  std::set<ArcProfile> canon;
  for_each_composition(m, k, [&](const std::vector<std::int64_t>& pink) {
    for_each_composition(n, k, [&](const std::vector<std::int64_t>& black) {
      canon.insert(canonical_profile(ArcProfile{pink, black}));
    });
  });
  return {canon.begin(), canon.end()};
}

SeparationMax max_noncrossing_quadruples(std::int64_t m, std::int64_t n,
                                         std::int64_t k) {
  SeparationMax best;
  best.value = -1;
  for (const ArcProfile& profile : enumerate_profiles(m, n, k)) {
    const std::int64_t score = noncrossing_quadruples(profile);
    if (score > best.value) {
      best.value = score;
      best.argmax.assign(1, profile);
    } else if (score == best.value) {
      best.argmax.push_back(profile);
    }
  }
  return best;
}

std::int64_t max_noncrossing_quadruples_pruned(std::int64_t m, std::int64_t n,
                                               std::int64_t k) {
  check_mnk(m, n, k);
  const auto ks = static_cast<std::size_t>(k);
  std::int64_t best = noncrossing_quadruples(
      ArcProfile{balanced_parts(m, k), balanced_parts(n, k)});
  for_each_composition(m, k, [&](const std::vector<std::int64_t>& pink) {
    // weights[s][t], s < t: how much a black pair on arcs s and t contributes
    // per unit product, summed over the pink pairs that separate it.
    std::vector<std::vector<std::int64_t>> weights(
        ks, std::vector<std::int64_t>(ks, 0));
    for (std::size_t i = 0; i + 1 < ks; ++i) {
      for (std::size_t j = i + 1; j < ks; ++j) {
        const std::int64_t mass = pink[i] * pink[j];
        if (mass == 0) continue;
        for (std::size_t s = i; s < j; ++s) {
          for (std::size_t t = j; t < ks; ++t) weights[s][t] += mass;
          for (std::size_t t = 0; t < i; ++t) weights[t][s] += mass;
        }
      }
    }
    best = BlackSearch(weights, n, best).best();
  });
  return best;
}

std::vector<ArcProfile> balanced_profiles(std::int64_t m, std::int64_t n,
                                          std::int64_t k) {
  check_mnk(m, n, k);
  std::vector<std::int64_t> pink = balanced_parts(m, k);
  std::sort(pink.begin(), pink.end());
  std::set<ArcProfile> canon;
  do {
    std::vector<std::int64_t> black = balanced_parts(n, k);
    std::sort(black.begin(), black.end());
    do {
      canon.insert(canonical_profile(ArcProfile{pink, black}));
    } while (std::next_permutation(black.begin(), black.end()));
  } while (std::next_permutation(pink.begin(), pink.end()));
  return {canon.begin(), canon.end()};
}

CprResult cpr_exact(std::int64_t m, std::int64_t n, std::int64_t K) {
  const CompleteBipartiteSpec spec{m, n};
  validate_spec(spec);
  if (K < 2 || K > m + n) {
    throw std::invalid_argument("K must satisfy 2 <= K <= m+n (got K=" +
                                std::to_string(K) + ")");
  }
  CprResult result;
  result.spec = spec;
  result.requested_k = K;
  std::int64_t effective = (K % 2 == 0) ? K : K - 1;
  effective = std::min(effective, 2 * std::min(m, n));
  result.effective_k = effective;
  const std::int64_t k = effective / 2;
  SeparationMax opt = max_noncrossing_quadruples(m, n, k);
  result.value = checked_sub(checked_mul(binom(m, 2), binom(n, 2)), opt.value);
  result.witnesses = std::move(opt.argmax);
  result.lower_bound = cpr_lower_bound(m, n, k);
  return result;
}

}  // namespace cprk
