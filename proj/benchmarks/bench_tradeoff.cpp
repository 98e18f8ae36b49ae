// Copyright 2026 The edtradeoff Authors
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

#include "edt/linalg.hpp"
#include "edt/measurement.hpp"
#include "edt/metrics.hpp"
#include "edt/oracle.hpp"
#include "edt/structures.hpp"

namespace {

using namespace edt;

void BM_EigHermitian(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  CMatrix z(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) z(i, j) = rng.complex_normal();
  const CMatrix m = (z + z.adjoint()) / 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(m));
}
BENCHMARK(BM_EigHermitian)->Arg(2)->Arg(3)->Arg(5)->Arg(8)->Arg(16);

void BM_HaarBasis(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(haar_random_basis(d, rng));
}
BENCHMARK(BM_HaarBasis)->Arg(3)->Arg(5)->Arg(16);

void BM_OverallError(benchmark::State& state) {
  const BasisTriple t = random_triple(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(overall_error(t.a, t.ap, t.b));
}
BENCHMARK(BM_OverallError)->Arg(2)->Arg(3)->Arg(5);

void BM_ComputeTradeoff(benchmark::State& state) {
  const BasisTriple t = random_triple(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(compute_tradeoff(t.a, t.ap, t.b));
}
BENCHMARK(BM_ComputeTradeoff)->Arg(3)->Arg(5);

void BM_RelaxedError(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const OrthonormalBasis a = haar_random_basis(d, 5);
  const OrthonormalBasis b = haar_random_basis(d, 6);
  for (auto _ : state) benchmark::DoNotOptimize(relaxed_error(a, b));
}
BENCHMARK(BM_RelaxedError)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_OracleMaxSum(benchmark::State& state) {
  const BasisTriple t = random_triple(static_cast<int>(state.range(0)), 7);
  oracle::SearchOptions o;
  o.samples = 10000;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::max_sum_over_states(t.a, t.ap, t.b, o));
}
BENCHMARK(BM_OracleMaxSum)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
