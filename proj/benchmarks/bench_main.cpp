// Copyright 2026 The horizon-ent Authors
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

#include "horizon/closed_form.hpp"
#include "horizon/density.hpp"
#include "horizon/fock.hpp"

namespace {

using namespace horizon;

void BM_JointEntropyDirect(benchmark::State& state) {
  const SqueezeParam sq = make_squeeze(2.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(detail::s_ab_direct(sq, sq, n));
  }
}
BENCHMARK(BM_JointEntropyDirect)->Arg(128)->Arg(512)->Arg(2048);

void BM_JointEntropyIntegral(benchmark::State& state) {
  const SqueezeParam sq = make_squeeze(2.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(detail::s_ab_integral(sq, sq, n));
  }
}
BENCHMARK(BM_JointEntropyIntegral)->Arg(512)->Arg(2048)->Arg(1 << 16);

void BM_ClosedFormConverged(benchmark::State& state) {
  const SqueezeParam sq = make_squeeze(static_cast<double>(state.range(0)));
  const auto cfg = SeriesConfig::tail(kDefaultTailTolerance);
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_measures(sq, sq, cfg));
  }
}
BENCHMARK(BM_ClosedFormConverged)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

void BM_ReducedDensity(benchmark::State& state) {
  const SqueezeParam sq = make_squeeze(1.0);
  const PureState psi =
      entangled_pair_state(sq, sq, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        reduced_density(psi, {mode::kAOut, mode::kBOut}));
  }
}
BENCHMARK(BM_ReducedDensity)->Arg(6)->Arg(10)->Arg(14);

void BM_Jacobi(benchmark::State& state) {
  const SqueezeParam sq = make_squeeze(1.0);
  const PureState psi =
      entangled_pair_state(sq, sq, static_cast<std::size_t>(state.range(0)));
  const Matrix rho =
      reduced_density(psi, {mode::kAOut, mode::kBOut}).entries();
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_symmetric(rho));
  }
}
BENCHMARK(BM_Jacobi)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
