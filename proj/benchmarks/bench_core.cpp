#include <benchmark/benchmark.h>

#include "thermoqubit/fock.hpp"
#include "thermoqubit/observables.hpp"
#include "thermoqubit/tfd.hpp"
#include "thermoqubit/wigner.hpp"

using namespace thermoqubit;

static void BM_MatrixExponential(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const auto [a, ad] = build_ladder(cutoff);
  const FockMatrix gen = Complex(0.4) * (ad * ad - a * a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matrix_exponential(gen));
  }
}

static void BM_BogoliubovUnitary(benchmark::State& state) {
  const ThermalParams p = ThermalParams::from_n_bar(0.2);
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bogoliubov_unitary(p, cutoff, 1.0));
  }
}

static void BM_DensityExpansion(benchmark::State& state) {
  const ThermalParams p = ThermalParams::from_n_bar(static_cast<double>(state.range(0)) / 10.0);
  const auto amps = PhysicalAmplitudes::reference();
  for (auto _ : state) {
    benchmark::DoNotOptimize(thermal_state_density_expansion(amps, p));
  }
}

static void BM_DensityOperator(benchmark::State& state) {
  const ThermalParams p = ThermalParams::from_n_bar(static_cast<double>(state.range(0)) / 10.0);
  const auto amps = PhysicalAmplitudes::reference();
  for (auto _ : state) {
    benchmark::DoNotOptimize(thermal_state_density_operator(amps, p));
  }
}

static void BM_MandelNumeric(benchmark::State& state) {
  const ThermalParams p = ThermalParams::from_n_bar(static_cast<double>(state.range(0)) / 10.0);
  const auto amps = PhysicalAmplitudes::reference();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mandel_numeric(amps, p));
  }
}

static void BM_WignerGrid(benchmark::State& state) {
  const ThermalParams p = ThermalParams::from_n_bar(static_cast<double>(state.range(0)) / 10.0);
  const FockMatrix rho = thermal_state_density_expansion(PhysicalAmplitudes::reference(), p);
  const GridSpec spec{-8.0, 8.0, 65, -8.0, 8.0, 65, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner_from_density(rho, spec, 1));
  }
}

BENCHMARK(BM_MatrixExponential)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BogoliubovUnitary)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DensityExpansion)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DensityOperator)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MandelNumeric)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_WignerGrid)->Arg(1)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
