// Serial reference kernels vs their OpenMP counterparts, plus the exact
// expansion for scale.
//
//   OMP_NUM_THREADS=4 ./build/bench/lpt_bench

#include <benchmark/benchmark.h>

#include "lpt/engine.hpp"
#include "lpt/kernels.hpp"
#include "lpt/oracle.hpp"

namespace {

lpt::Matrix sextic_hamiltonian(int dim) {
  lpt::PotentialSpec spec;
  spec.couplings[4] = lpt::BiPoly::lambda() * lpt::BigRational(1, 2);
  const auto problem = lpt::oracle::make_problem(spec, lpt::BigRational(1, 1000), dim, {0});
  return lpt::oracle::build_hamiltonian(problem);
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto x = lpt::oracle::position_matrix(static_cast<int>(state.range(0)), 1.0, 1.0);
  const auto y = lpt::kernels::multiply_serial(x, x);
  for (auto _ : state) benchmark::DoNotOptimize(lpt::kernels::multiply_serial(y, y));
}

void BM_MultiplyOmp(benchmark::State& state) {
  const auto x = lpt::oracle::position_matrix(static_cast<int>(state.range(0)), 1.0, 1.0);
  const auto y = lpt::kernels::multiply(x, x);
  for (auto _ : state) benchmark::DoNotOptimize(lpt::kernels::multiply(y, y));
}

void BM_JacobiSerial(benchmark::State& state) {
  const auto h = sextic_hamiltonian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lpt::kernels::jacobi_eigenvalues_serial(h));
}

void BM_JacobiOmp(benchmark::State& state) {
  const auto h = sextic_hamiltonian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lpt::kernels::jacobi_eigenvalues(h));
}

void BM_ExpandSextic(benchmark::State& state) {
  lpt::PotentialSpec spec;
  spec.couplings[4] = lpt::BiPoly::lambda() * lpt::BigRational(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lpt::expand(spec, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(60)->Arg(120)->Arg(240);
BENCHMARK(BM_MultiplyOmp)->Arg(60)->Arg(120)->Arg(240);
BENCHMARK(BM_JacobiSerial)->Arg(60)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiOmp)->Arg(60)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandSextic)->Arg(7)->Arg(11)->Arg(15)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
