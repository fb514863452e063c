#include <benchmark/benchmark.h>

#include <random>

#include "dimerq/sweep.hpp"

using namespace dimerq;

static void BM_ApplyRotation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> gauss;
  StateVector psi{n, Eigen::VectorXcd(Eigen::Index{1} << n)};
  for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i) {
    psi.amplitudes(i) = Complex(gauss(rng), gauss(rng));
  }
  psi.amplitudes.normalize();
  const Gate g = Gate::rx(1 + n / 2, 0.37);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_gate(psi, g));
  }
}
BENCHMARK(BM_ApplyRotation)->Arg(4)->Arg(8)->Arg(12);

static void BM_ApplyCnot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector psi = ground_state(n);
  const Gate g = Gate::cnot(1, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_gate(psi, g));
  }
}
BENCHMARK(BM_ApplyCnot)->Arg(4)->Arg(8)->Arg(12);

static void BM_ThermalCircuitUnitary(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(circuit_unitary(thermal_full_circuit(2.12, 1.1)));
  }
}
BENCHMARK(BM_ThermalCircuitUnitary);

static void BM_ExactThermalSweepRow(benchmark::State& state) {
  for (auto _ : state) {
    const StateVector psi = run_circuit(thermal_full_circuit(2.12, 0.9));
    const std::vector<double> p = marginal_probabilities(psi, {2, 3});
    benchmark::DoNotOptimize(estimate_thermal_intensities(
        {p[0], p[1], p[2], p[3]}, 0.9, 2.12, IntensitySource::ExactCircuit));
  }
}
BENCHMARK(BM_ExactThermalSweepRow);

static void BM_NoisyThermalRow(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_with_noise(thermal_full_circuit(2.12, 0.9), {0.02}));
  }
}
BENCHMARK(BM_NoisyThermalRow);

static void BM_Sample4096(benchmark::State& state) {
  const StateVector psi = run_circuit(thermal_full_circuit(2.12, 0.9));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample(psi, {2, 3}, 4096, ++seed));
  }
}
BENCHMARK(BM_Sample4096);

BENCHMARK_MAIN();
