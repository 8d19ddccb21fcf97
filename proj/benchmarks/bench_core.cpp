#include <benchmark/benchmark.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "cprk/chords.hpp"
#include "cprk/model.hpp"
#include "cprk/optimizer.hpp"
#include "cprk/oracle.hpp"

namespace {

cprk::ArcProfile scrambled_profile(std::int64_t k) {
  cprk::ArcProfile p;
  for (std::int64_t i = 0; i < k; ++i) {
    p.pink.push_back((i * 5 + 2) % 4);
    p.black.push_back((i * 3 + 1) % 4);
  }
  return p;
}

void bm_canonical_profile(benchmark::State& state) {
  const cprk::ArcProfile profile = scrambled_profile(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cprk::canonical_profile(profile));
  }
}
BENCHMARK(bm_canonical_profile)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_enumerate_profiles(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  const std::int64_t k = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cprk::enumerate_profiles(m, m, k));
  }
}
BENCHMARK(bm_enumerate_profiles)->Args({4, 3})->Args({6, 3})->Args({6, 4});

void bm_max_noncrossing_exhaustive(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  const std::int64_t k = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cprk::max_noncrossing_quadruples(m, m, k));
  }
}
BENCHMARK(bm_max_noncrossing_exhaustive)->Args({5, 3})->Args({6, 4})->Args({7, 5});

void bm_max_noncrossing_pruned(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  const std::int64_t k = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cprk::max_noncrossing_quadruples_pruned(m, m, k));
  }
}
BENCHMARK(bm_max_noncrossing_pruned)
    ->Args({5, 3})
    ->Args({6, 4})
    ->Args({7, 5})
    ->Args({10, 6})
    ->Args({12, 8});

void bm_cpr_exact(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  const std::int64_t K = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cprk::cpr_exact(m, m, K));
  }
}
BENCHMARK(bm_cpr_exact)->Args({4, 6})->Args({6, 8})->Args({8, 8});

void bm_brute_force_cpr(benchmark::State& state) {
  const cprk::GraphSpec graph =
      cprk::complete_bipartite(state.range(0), state.range(0));
  const std::int64_t k = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cprk::brute_force_cpr(graph, k));
  }
}
BENCHMARK(bm_brute_force_cpr)->Args({3, 4})->Args({4, 4})->Args({4, 8});

void bm_count_crossings(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  const cprk::GraphSpec graph = cprk::complete_bipartite(m, m);
  std::vector<std::int32_t> order(static_cast<std::size_t>(2 * m));
  std::iota(order.begin(), order.end(), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cprk::count_crossings(order, graph));
  }
}
BENCHMARK(bm_count_crossings)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
