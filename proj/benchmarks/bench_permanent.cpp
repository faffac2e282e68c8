// Copyright 2026 The bosonbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "bosonbench/haar.hpp"
#include "bosonbench/matrix.hpp"
#include "bosonbench/permanent.hpp"

namespace {

bb::ComplexMatrix slice(std::size_t n) {
  const bb::ComplexMatrix u = bb::haar_unitary(2 * n, 17);
  bb::ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = u.at(i, j);
  }
  return m;
}

void BM_PermanentNaive(benchmark::State& state) {
  const bb::ComplexMatrix m = slice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bb::permanent_naive(m));
}

void BM_PermanentRyser(benchmark::State& state) {
  const bb::ComplexMatrix m = slice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bb::permanent_ryser(m));
}

void BM_DistinguishableProbability(benchmark::State& state) {
  const bb::ComplexMatrix m = slice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bb::distinguishable_probability(m));
}

}  // namespace

BENCHMARK(BM_PermanentNaive)->DenseRange(4, 9);
BENCHMARK(BM_PermanentRyser)->DenseRange(4, 20, 4);
BENCHMARK(BM_DistinguishableProbability)->DenseRange(4, 16, 4);

BENCHMARK_MAIN();
