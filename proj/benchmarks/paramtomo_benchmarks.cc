// Copyright 2026 The paramtomo Authors
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

// Microbenchmarks for the computational hot spots: brute-force RIP
// certification, shadow acquisition, sparse recovery, support identification
// and Bessel evaluation.

#include <benchmark/benchmark.h>

#include <cmath>
#include <utility>
#include <vector>

#include "paramtomo/bos.h"
#include "paramtomo/csolve.h"
#include "paramtomo/qsim.h"
#include "paramtomo/recovery.h"
#include "paramtomo/suppid.h"
#include "paramtomo/tomo.h"
#include "paramtomo/types.h"

namespace paramtomo {
namespace {

MeasurementMatrix FourierMatrix(int e_max, int m, uint64_t seed) {
  BasisSystem basis = BasisSystem::Fourier(e_max);
  return BuildMeasurementMatrix(basis, SampleMeasure(basis, m, seed));
}

void BM_RipConstantBruteForce(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  MeasurementMatrix a = FourierMatrix(6, 48, 1);
  Matrix normalized = a.entries / std::sqrt(static_cast<double>(a.rows()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RipConstantBruteForce(normalized, s).delta_s);
  }
}
BENCHMARK(BM_RipConstantBruteForce)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_AcquireShadows(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  Matrix rho = RandomDensityMatrix(1 << n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(AcquireShadows(rho, 10000, rng).snapshots.size());
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_AcquireShadows)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

struct ExactProblem {
  IntegerSpectrumHamiltonian h = IntegerSpectrumHamiltonian::FromDiagonal({0, 1, 3, 4});
  Matrix rho0;
  MeasurementMatrix a;
  std::vector<Estimate> observations;

  ExactProblem() : a(FourierMatrix(4, 36, 3)) {
    Vector psi = Vector::Zero(4);
    psi(0) = psi(1) = 1.0 / std::sqrt(2.0);
    rho0 = psi * psi.adjoint();
    Hamiltonian dense = h.ToHamiltonian();
    for (double t : a.points) observations.emplace_back(Evolve(dense, rho0, t));
  }
};

void BM_RecoverSparse(benchmark::State& state) {
  ExactProblem problem;
  RecoveryPlan plan;
  plan.basis = problem.a.basis;
  plan.m = problem.a.rows();
  for (auto _ : state) {
    std::vector<Estimate> obs = problem.observations;
    benchmark::DoNotOptimize(RecoverSparse(plan, {-1, 0, 1}, std::move(obs), problem.a));
  }
}
BENCHMARK(BM_RecoverSparse)->Unit(benchmark::kMicrosecond);

void BM_IdentifySupport(benchmark::State& state) {
  ExactProblem problem;
  const int64_t probes = state.range(0);
  SupportIdOptions options;
  options.strict = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        IdentifySupport(problem.observations, problem.a, 3, probes, 4, options).support);
  }
  state.SetItemsProcessed(state.iterations() * probes);
}
BENCHMARK(BM_IdentifySupport)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_BesselJ(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) {
    double sum = 0.0;
    for (int k = 0; k <= 60; ++k) sum += BesselJ(k, x);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_BesselJ)->Arg(1)->Arg(10)->Arg(40);

}  // namespace
}  // namespace paramtomo

BENCHMARK_MAIN();
