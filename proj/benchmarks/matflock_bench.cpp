// Copyright 2026 The Authors.
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

#include "matflock/algebraic.hpp"
#include "matflock/flock.hpp"
#include "matflock/valuation.hpp"

namespace {

using namespace matflock;

ToricRep sample_rep(std::uint32_t p) {
  ToricRep rep;
  rep.a = IntMatrix::from_rows({{1, 0, 0, 1, 1, 2}, {0, 1, 0, 1, 3, 4}, {0, 0, 1, 2, 9, 5}});
  rep.p = p;
  return rep;
}

LinearizedParam sample_param() {
  return LinearizedParam(2, {"s", "t"},
                         {{{0, 0, 1}}, {{1, 0, 1}}, {{0, 0, 1}, {1, 0, 1}}, {{0, 0, 1}, {1, 2, 1}}, {{0, 1, 1}, {1, 0, 1}}});
}

void BM_LindstromToric(benchmark::State& state) {
  const ToricRep rep = sample_rep(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lindstrom_toric(rep));
}
BENCHMARK(BM_LindstromToric)->Arg(2)->Arg(3)->Arg(5);

void BM_MatroidAt(benchmark::State& state) {
  const Valuation nu = lindstrom_toric(sample_rep(2));
  const IntegerVector alpha = {3, -1, 0, 2, -2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(matroid_at(nu, alpha));
}
BENCHMARK(BM_MatroidAt);

void BM_CheckFlockAxioms(benchmark::State& state) {
  const Valuation nu = lindstrom_toric(sample_rep(2));
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const MatroidFlock flock = flock_from_valuation(nu);
    benchmark::DoNotOptimize(check_flock_axioms(flock, radius));
  }
}
BENCHMARK(BM_CheckFlockAxioms)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ExtractValuation(benchmark::State& state) {
  const Valuation nu = lindstrom_toric(sample_rep(3));
  ExtractOptions options;
  options.cutoff = static_cast<int>(nu.spread()) + 1;
  options.verify_radius = 0;
  for (auto _ : state) {
    const MatroidFlock flock = flock_from_valuation(nu);
    benchmark::DoNotOptimize(extract_valuation(flock, options));
  }
}
BENCHMARK(BM_ExtractValuation)->Unit(benchmark::kMillisecond);

void BM_TangentSpace(benchmark::State& state) {
  const LinearizedParam param = linearized_shift(sample_param(), {-2, -2, -2, 1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(tangent_space(param));
}
BENCHMARK(BM_TangentSpace);

void BM_LinearizedFlockWindow(benchmark::State& state) {
  const LinearizedParam param = sample_param();
  for (auto _ : state) benchmark::DoNotOptimize(check_frobenius_axioms(param, 1));
}
BENCHMARK(BM_LinearizedFlockWindow)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
