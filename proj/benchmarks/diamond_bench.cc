// Copyright 2026 The Diamond Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "diamond/genfun.h"
#include "diamond/oracle.h"
#include "diamond/series.h"

namespace diamond {
namespace {

TruncatedSeries Dense(Ring ring, std::size_t order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TruncatedSeries s(ring, order);
  for (std::size_t i = 0; i < order; ++i) s.AddTerm(i, static_cast<long>(rng() % 1000));
  return s;
}

void BM_MultiplyIntegers(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TruncatedSeries a = Dense(Ring::Integers(), n, 1), b = Dense(Ring::Integers(), n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Multiply(a, b));
}
BENCHMARK(BM_MultiplyIntegers)->Arg(100)->Arg(500)->Arg(2000);

void BM_MultiplyModular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Ring ring = Ring::Modulo(1'000'000'007);
  const TruncatedSeries a = Dense(ring, n, 1), b = Dense(ring, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Multiply(a, b));
}
BENCHMARK(BM_MultiplyModular)->Arg(100)->Arg(500)->Arg(2000);

void BM_SdSeriesMod11(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SdSeries(d, 597, Ring::Modulo(11)));
}
BENCHMARK(BM_SdSeriesMod11)->Arg(1)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_SdSeriesIntegers(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SdSeries(d, 300));
}
BENCHMARK(BM_SdSeriesIntegers)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RdSeries(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(RdSeries(d, 300));
}
BENCHMARK(BM_RdSeries)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RdCounts(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(RdCounts(d, 20));
}
BENCHMARK(BM_RdCounts)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SdCounts(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SdCounts(d, 20));
}
BENCHMARK(BM_SdCounts)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace diamond

BENCHMARK_MAIN();
