#include <algorithm>
#include <random>

#include <benchmark/benchmark.h>

#include "pforge/sorters.hpp"

namespace {

pforge::Perm random_perm(int n, unsigned seed) {
  pforge::Perm pi = pforge::identity_perm(n);
  std::mt19937 rng(seed);
  std::shuffle(pi.begin(), pi.end(), rng);
  return pi;
}

void BM_avoids_4312_linear(benchmark::State& state) {
  const pforge::Perm pi = random_perm(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pforge::avoids_4312_linear(pi));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_avoids_4312_linear)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

void BM_stack_sort(benchmark::State& state) {
  const pforge::Perm pi = random_perm(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pforge::stack_sort(pi));
  }
}
BENCHMARK(BM_stack_sort)->RangeMultiplier(10)->Range(1000, 1000000);

void BM_queue_sort(benchmark::State& state) {
  const pforge::Perm pi = random_perm(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pforge::queue_sort(pi));
  }
}
BENCHMARK(BM_queue_sort)->RangeMultiplier(10)->Range(1000, 1000000);

void BM_stack_sort_depth(benchmark::State& state) {
  const pforge::Perm pi = random_perm(100000, 13);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pforge::stack_sort_depth(pi, d));
  }
}
BENCHMARK(BM_stack_sort_depth)->Arg(2)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
