// bench/bench_kernels.cc

// Copyright 2026  The syllasplit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels, plus the full pipeline.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "syllasplit/kernels.h"
#include "syllasplit/pipeline.h"

namespace {

std::vector<double> signal(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = u(rng);
  return x;
}

void BM_RectifySerial(benchmark::State& state) {
  const auto x = signal(state.range(0));
  std::vector<double> out(x.size());
  for (auto _ : state) {
    syllasplit::kernels::serial::rectify(x, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * x.size());
}

void BM_RectifyParallel(benchmark::State& state) {
  const auto x = signal(state.range(0));
  std::vector<double> out(x.size());
  for (auto _ : state) {
    syllasplit::kernels::rectify(x, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * x.size());
}

void BM_SumSquaresSerial(benchmark::State& state) {
  const auto x = signal(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(syllasplit::kernels::serial::sum_of_squares(x));
  state.SetItemsProcessed(state.iterations() * x.size());
}

void BM_SumSquaresParallel(benchmark::State& state) {
  const auto x = signal(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(syllasplit::kernels::sum_of_squares(x));
  state.SetItemsProcessed(state.iterations() * x.size());
}

void BM_BinarizeSerial(benchmark::State& state) {
  const auto x = signal(state.range(0));
  std::vector<std::uint8_t> out(x.size());
  for (auto _ : state) {
    syllasplit::kernels::serial::binarize(x, 0.1, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * x.size());
}

void BM_BinarizeParallel(benchmark::State& state) {
  const auto x = signal(state.range(0));
  std::vector<std::uint8_t> out(x.size());
  for (auto _ : state) {
    syllasplit::kernels::binarize(x, 0.1, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * x.size());
}

void BM_Pipeline(benchmark::State& state) {
  std::vector<double> x(state.range(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = 0.6 * std::sin(2.0 * M_PI * 200.0 * i / 44100.0) *
           std::abs(std::sin(2.0 * M_PI * 2.0 * i / 44100.0));
  const syllasplit::AudioBuffer buf(x, 44100);
  for (auto _ : state)
    benchmark::DoNotOptimize(syllasplit::segment_buffer(buf, {}));
  state.SetItemsProcessed(state.iterations() * x.size());
}

}  // namespace

BENCHMARK(BM_RectifySerial)->Range(1 << 14, 1 << 22);
BENCHMARK(BM_RectifyParallel)->Range(1 << 14, 1 << 22);
BENCHMARK(BM_SumSquaresSerial)->Range(1 << 14, 1 << 22);
BENCHMARK(BM_SumSquaresParallel)->Range(1 << 14, 1 << 22);
BENCHMARK(BM_BinarizeSerial)->Range(1 << 14, 1 << 22);
BENCHMARK(BM_BinarizeParallel)->Range(1 << 14, 1 << 22);
BENCHMARK(BM_Pipeline)->Arg(76800)->Arg(44100 * 90);

BENCHMARK_MAIN();
