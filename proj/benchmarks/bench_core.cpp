#include <benchmark/benchmark.h>

#include <vector>

#include "qent/entropy.hpp"
#include "qent/linalg.hpp"
#include "qent/protocol.hpp"
#include "qent/separability.hpp"
#include "qent/states.hpp"

namespace {

void BM_HermitianEig(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto rho = qent::random_density(dim, dim, 17).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(qent::hermitian_eig(rho));
}
BENCHMARK(BM_HermitianEig)->Arg(4)->Arg(9)->Arg(16)->Arg(32)->Arg(64);

void BM_ConditionalAmplitude(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const qent::DensityOperator rho(qent::random_density(d * d, d * d, 3).matrix(), {d, d});
  for (auto _ : state) benchmark::DoNotOptimize(qent::conditional_amplitude(rho));
}
BENCHMARK(BM_ConditionalAmplitude)->Arg(2)->Arg(3)->Arg(4);

void BM_Trotter(benchmark::State& state) {
  const qent::DensityOperator rho(qent::random_density(4, 4, 5).matrix(), {2, 2});
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qent::conditional_amplitude_trotter(rho, n));
}
BENCHMARK(BM_Trotter)->Arg(16)->Arg(4096);

void BM_Teleportation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qent::run_teleportation());
}
BENCHMARK(BM_Teleportation)->Unit(benchmark::kMillisecond);

void BM_WernerScan(benchmark::State& state) {
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(qent::werner_scan(grid));
}
BENCHMARK(BM_WernerScan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
