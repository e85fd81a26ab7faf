// Copyright 2026 The logspace Authors
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

#include <vector>

#include "logspace/log_norm.hpp"
#include "logspace/sampling.hpp"

namespace {

using namespace logspace;

MeasureSpace staircase(int pieces) {
  std::vector<IntervalPiece> density;
  for (int k = 0; k < pieces; ++k) density.push_back({double(k), double(k + 1), 1.0 + k % 7});
  return MeasureSpace({Component(WeightLabel{0}, PiecewiseDensity(std::move(density)))});
}

StepFunction random_on(const MeasureSpace& space, int pieces) {
  SampleRng rng(1, 0);
  return random_step_function(space, rng, {.max_pieces = pieces});
}

void BM_ExternalNorm(benchmark::State& state) {
  const auto space = staircase(static_cast<int>(state.range(0)));
  const auto f = random_on(space, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(log_norm(f, space, External{}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExternalNorm)->RangeMultiplier(4)->Range(4, 4096)->Complexity();

void BM_GeneralizedNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto space = staircase(n);
  const auto f = random_on(space, n);
  const auto h = DensityField({staircase(n).component(0).density()});
  const NormKind kind = Generalized{h, h};
  for (auto _ : state) benchmark::DoNotOptimize(log_norm(f, space, kind));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GeneralizedNorm)->RangeMultiplier(4)->Range(4, 4096)->Complexity();

void BM_RiemannOracle(benchmark::State& state) {
  const auto space = staircase(4);
  const auto f = random_on(space, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(riemann_oracle(f, space, External{}, state.range(0)));
  }
}
BENCHMARK(BM_RiemannOracle)->Arg(1000)->Arg(100000);

void BM_AddAndMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto space = staircase(n);
  SampleRng rng(2, 0);
  const auto f = random_step_function(space, rng, {.max_pieces = n});
  const auto g = random_step_function(space, rng, {.max_pieces = n});
  for (auto _ : state) {
    benchmark::DoNotOptimize(add(f, g));
    benchmark::DoNotOptimize(multiply(f, g));
  }
}
BENCHMARK(BM_AddAndMultiply)->RangeMultiplier(8)->Range(8, 4096);

}  // namespace
