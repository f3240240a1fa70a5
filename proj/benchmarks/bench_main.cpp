/*
 * Copyright 2026 The PINNup Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <numbers>

#include "pinnup/bessel.hpp"
#include "pinnup/network.hpp"
#include "pinnup/refsolver.hpp"
#include "pinnup/sampler.hpp"
#include "pinnup/splitting.hpp"

using namespace pinnup;

namespace {

const VelocityModel& model() {
  static const VelocityModel m = default_model();
  return m;
}

PEConfig pe() { return make_pe_config(2, true, {0.0, 2.5}, {0.0, 2.5}, {0.0, 2.5}); }

void BM_LossAndGradient(benchmark::State& state) {
  const std::size_t width = static_cast<std::size_t>(state.range(0));
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  const NetworkParams params = init_random({width, width}, pe(), 1.0, 1);
  const SampleBatch batch = draw_samples(model(), n, 4.0 * std::numbers::pi, {}, 2);
  const PreparedBatch prepared(batch, params.pe());
  for (auto _ : state) benchmark::DoNotOptimize(loss_and_gradient(params, prepared, batch.omega));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_LossAndGradient)
    ->Args({4, 10000})
    ->Args({16, 10000})
    ->Args({64, 10000})
    ->Unit(benchmark::kMillisecond);

void BM_ForwardWithLaplacian(benchmark::State& state) {
  const NetworkParams params = init_random({16, 16}, pe(), 1.0, 1);
  Coord x{0.3, 1.2, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward_with_laplacian(params, x));
    x[0] += 1e-9;
  }
}
BENCHMARK(BM_ForwardWithLaplacian);

void BM_Split(benchmark::State& state) {
  const NetworkParams params = init_random({16, 16}, pe(), 1.0, 1);
  SplitConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(split_network(params, cfg));
}
BENCHMARK(BM_Split);

void BM_BesselJ0Y0(benchmark::State& state) {
  double x = 0.01, acc = 0.0;
  for (auto _ : state) {
    acc += bessel_j0(x) + bessel_y0(x);
    x = x > 50.0 ? 0.01 : x + 0.37;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_BesselJ0Y0);

void BM_ScatteredSolve(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const GridSpec grid = GridSpec::covering(model(), n, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_scattered(model(), 4.0 * std::numbers::pi, 1.0, 0.025, grid));
}
BENCHMARK(BM_ScatteredSolve)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_BandedLU(benchmark::State& state) {
  const std::size_t n = 20000, k = static_cast<std::size_t>(state.range(0));
  BandMatrix a(n, k, k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i >= k ? i - k : 0; j <= std::min(n - 1, i + k); ++j) a.at(i, j) = {0.01, 0.02};
    a.at(i, i) = {4.0 * k, 1.0};
  }
  const std::vector<cplx> rhs(n, cplx{1.0, 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(banded_lu_solve(a, rhs));
}
BENCHMARK(BM_BandedLU)->Arg(50)->Arg(140)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
