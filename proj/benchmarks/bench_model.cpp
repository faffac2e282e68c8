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
#include "bosonbench/likelihood.hpp"
#include "bosonbench/matrix.hpp"
#include "bosonbench/model.hpp"
#include "bosonbench/noise.hpp"

namespace {

bb::ComplexMatrix slice(std::size_t n) {
  const bb::ComplexMatrix u = bb::haar_unitary(2 * n, 23);
  bb::ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = u.at(i, j);
  }
  return m;
}

void BM_OutcomePoly(benchmark::State& state) {
  const bb::ComplexMatrix m = slice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bb::outcome_poly(m));
}

void BM_OutcomePolyFast(benchmark::State& state) {
  const bb::ComplexMatrix m = slice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bb::outcome_poly_fast(m));
}

void BM_NormalizationExact(benchmark::State& state) {
  const bb::ComplexMatrix u = bb::haar_unitary(16, 29);
  std::vector<int> inputs;
  for (int i = 0; i < state.range(0); ++i) inputs.push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(bb::normalization_exact(u, inputs, 1));
}

void BM_MleEstimate(benchmark::State& state) {
  const bb::ComplexMatrix u = bb::haar_unitary(16, 31);
  const std::vector<int> inputs{0, 1, 2};
  const bb::SampleSet samples =
      bb::exact_sampler(u, inputs, 0.9, static_cast<std::uint64_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(bb::mle_estimate(samples, u, inputs));
}

}  // namespace

BENCHMARK(BM_OutcomePoly)->DenseRange(3, 8);
BENCHMARK(BM_OutcomePolyFast)->DenseRange(3, 12, 3);
BENCHMARK(BM_NormalizationExact)->DenseRange(2, 4);
BENCHMARK(BM_MleEstimate)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
