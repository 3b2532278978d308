// Copyright 2026 The AttractorLab Authors
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

#include <cstddef>

#include "attractorlab/attractor.h"
#include "attractorlab/complexity.h"
#include "attractorlab/factor_index.h"
#include "attractorlab/generator_spec.h"
#include "attractorlab/lz.h"
#include "attractorlab/word.h"

namespace attractorlab {
namespace {

const AttractorGuards kGuards{4096, 16};

Word prefix(const char* spec, benchmark::State& state) {
  return GeneratorSpec::parse(spec).prefix(
      static_cast<std::size_t>(state.range(0)));
}

void BM_GammaStarThueMorse(benchmark::State& state) {
  Word w = prefix("morphic:a=ab;b=ba:seed=a", state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_star(w, {}, kGuards).size);
  }
}
BENCHMARK(BM_GammaStarThueMorse)->RangeMultiplier(2)->Range(64, 1024);

// Toeplitz prefixes need ever larger attractors; this is the expensive case.
void BM_GammaStarToeplitz(benchmark::State& state) {
  Word w = prefix("toeplitz:12???", state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_star(w, {}, kGuards).size);
  }
}
BENCHMARK(BM_GammaStarToeplitz)->RangeMultiplier(2)->Range(32, 512);

void BM_SpanAndLm(benchmark::State& state) {
  Word w = prefix("sturmian:2,1,3,(2)", state);
  for (auto _ : state) {
    FactorIndex index(w);
    benchmark::DoNotOptimize(span(index).value);
    benchmark::DoNotOptimize(lm(index));
  }
}
BENCHMARK(BM_SpanAndLm)->RangeMultiplier(4)->Range(64, 4096);

void BM_FactorIndex(benchmark::State& state) {
  Word w = prefix("pow2", state);
  for (auto _ : state) {
    FactorIndex index(w);
    benchmark::DoNotOptimize(index.longest_repeat());
  }
}
BENCHMARK(BM_FactorIndex)->RangeMultiplier(4)->Range(64, 4096);

void BM_LzParse(benchmark::State& state) {
  Word w = prefix("debruijn:16:01", state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lz_parse(w).phrase_count());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LzParse)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);

void BM_FactorComplexity(benchmark::State& state) {
  Word w = prefix("sturmian:(1)", state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_complexity(w, 32));
  }
}
BENCHMARK(BM_FactorComplexity)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);

}  // namespace
}  // namespace attractorlab

BENCHMARK_MAIN();
