// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "tkmotive/point_count.hpp"

using namespace tkmotive;

namespace {

// Args: m, n, q, threads.
void BM_CountAgl2(benchmark::State& state) {
  const TorusKnotParams p(state.range(0), state.range(1));
  const auto q = static_cast<std::uint32_t>(state.range(2));
  const CountOptions opts{static_cast<unsigned>(state.range(3)), kDefaultGroupBudget};
  for (auto _ : state) {
    CountReport r = count_agl2(p, q, opts);
    benchmark::DoNotOptimize(r.totals.agl_total);
  }
  state.counters["elements/s"] =
      benchmark::Counter(static_cast<double>(gl2_order(q)) * static_cast<double>(state.iterations()),
                         benchmark::Counter::kIsRate);
}
BENCHMARK(BM_CountAgl2)
    ->Args({2, 3, 7, 1})
    ->Args({2, 5, 11, 1})
    ->Args({3, 4, 13, 1})
    ->Args({3, 4, 13, 4})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_SolutionIndex(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const PrimeField f(q);
  const TorusKnotParams p(2, 3);
  for (auto _ : state) {
    Gl2SolutionIndex index(f, p);
    benchmark::DoNotOptimize(index.size());
  }
}
BENCHMARK(BM_SolutionIndex)->Arg(7)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_CountAgl1(benchmark::State& state) {
  const TorusKnotParams p(3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(count_agl1(p, 61).totals.agl_total);
}
BENCHMARK(BM_CountAgl1);

void BM_Classify(benchmark::State& state) {
  const PrimeField f(13);
  const TorusKnotParams p(3, 4);
  const auto sols = collect_gl2_solutions(p, 13);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = sols[i++ % sols.size()];
    benchmark::DoNotOptimize(classify_gl2_pair(f, p, a, b));
  }
}
BENCHMARK(BM_Classify);

}  // namespace
