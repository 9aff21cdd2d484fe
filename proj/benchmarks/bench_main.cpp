// Copyright 2026 The qsv Authors
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

#include "qsv/charfunc.hpp"
#include "qsv/dfe.hpp"
#include "qsv/random_states.hpp"
#include "qsv/states.hpp"
#include "qsv/verification.hpp"

namespace {

using namespace qsv;

void BM_TwoQutritStrategyFixed(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(strategy_two_qutrit(2.0, Theta3Policy::Fixed(0.0)));
  }
}
BENCHMARK(BM_TwoQutritStrategyFixed);

void BM_TwoQutritStrategyOptimized(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(strategy_two_qutrit(2.0, Theta3Policy::Optimize()));
  }
}
BENCHMARK(BM_TwoQutritStrategyOptimized)->Unit(benchmark::kMillisecond);

void BM_QuditGeneral(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<double> c(d);
  for (int i = 0; i < d; ++i) c[i] = 1.0 + i;
  double norm = 0;
  for (double x : c) norm += x * x;
  for (double& x : c) x /= std::sqrt(norm);
  const auto psi = general_schmidt(c, d);
  for (auto _ : state) benchmark::DoNotOptimize(strategy_qudit_general(psi));
}
BENCHMARK(BM_QuditGeneral)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Report(benchmark::State& state) {
  const auto s = strategy_two_qutrit(2.0, Theta3Policy::Fixed(0.0));
  for (auto _ : state) benchmark::DoNotOptimize(report(s, 0.01, 0.1));
}
BENCHMARK(BM_Report);

void BM_CharSud(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  const ComplexMatrix rho = random_density_matrix(d * d, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(char_sud(rho, d, d));
}
BENCHMARK(BM_CharSud)->DenseRange(2, 6);

void BM_CharWeyl(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  const ComplexMatrix rho = random_density_matrix(d * d, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(char_weyl(rho, d));
}
BENCHMARK(BM_CharWeyl)->Arg(3)->Arg(5);

void BM_Estimate(benchmark::State& state) {
  const auto target = two_qutrit_target(2.0);
  const ComplexMatrix t = projector(target.vector);
  const auto plan = make_plan(char_sud(t, 3, 3), 0.05, 0.1);
  const ComplexMatrix rho = depolarize(t, 0.2);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(estimate(plan, rho, ++seed));
  state.counters["ell"] = static_cast<double>(plan.ell);
}
BENCHMARK(BM_Estimate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
