#include <benchmark/benchmark.h>

#include "respond/respond.hpp"

using namespace respond;

namespace {

void BM_CharPoly(benchmark::State& state) {
  const ModelParams p = baseline_params(static_cast<int>(state.range(0)));
  const Complex w(0.3, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(p, w));
}
BENCHMARK(BM_CharPoly)->Arg(60)->Arg(200)->Arg(1000);

void BM_DenseDeterminant(benchmark::State& state) {
  const ModelParams p = baseline_params(static_cast<int>(state.range(0)));
  const Matrix h = build_hamiltonian(p, BoundaryKind::Pobc);
  for (auto _ : state) benchmark::DoNotOptimize(dense_determinant(h, Complex(0.3, 0.2)));
}
BENCHMARK(BM_DenseDeterminant)->Arg(60)->Arg(200);

void BM_ResolventColumn(benchmark::State& state) {
  const ModelParams p = baseline_params(static_cast<int>(state.range(0)));
  const Matrix h = build_hamiltonian(p, BoundaryKind::Pobc);
  for (auto _ : state) benchmark::DoNotOptimize(solve_resolvent(h, Complex(0, 0.4), 1));
}
BENCHMARK(BM_ResolventColumn)->Arg(60)->Arg(100)->Arg(200);

void BM_Cgbz1Curve(benchmark::State& state) {
  const ModelParams p = baseline_params(60);
  for (auto _ : state) benchmark::DoNotOptimize(cgbz_curve(p, 1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Cgbz1Curve)->Arg(256)->Arg(1024);

void BM_PobcSpectrum(benchmark::State& state) {
  const ModelParams p = baseline_params(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pobc_spectrum(p));
}
BENCHMARK(BM_PobcSpectrum)->Arg(20)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ClosedFormProfile(benchmark::State& state) {
  const ModelParams p = baseline_params(60);
  for (auto _ : state) {
    for (int k = 1; k <= 60; ++k) benchmark::DoNotOptimize(closed_form(p, Complex(0, 0.1), k, 1));
  }
}
BENCHMARK(BM_ClosedFormProfile)->Unit(benchmark::kMicrosecond);

void BM_ErrorProfile(benchmark::State& state) {
  const ModelParams p = baseline_params(60);
  const DisorderSpec d{DisorderTarget::Hoppings, 0.05, 42};
  for (auto _ : state) benchmark::DoNotOptimize(error_profile(p, Complex(0, 0.25), 1, d, 20));
}
BENCHMARK(BM_ErrorProfile)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
