#include <benchmark/benchmark.h>

#include "hpd/criterion.hpp"
#include "hpd/hankel.hpp"
#include "hpd/kernel.hpp"
#include "hpd/process.hpp"

namespace {

using namespace hpd;

void BM_PsdCheckBeta(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  const auto k = branching_toeplitz(HpdSequence::beta(2, depth), truncate(2, depth));
  for (auto _ : state) benchmark::DoNotOptimize(psd_check(k));
  state.SetLabel(std::to_string(k.size()) + " vertices");
}
BENCHMARK(BM_PsdCheckBeta)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_SimulateXr(benchmark::State& state) {
  SimulationConfig cfg;
  cfg.q = 2;
  cfg.r = 0.5;
  cfg.depth = static_cast<int>(state.range(0));
  cfg.samples = 10000;
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_xr(cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.samples));
}
BENCHMARK(BM_SimulateXr)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SzegoQuadrature(benchmark::State& state) {
  const auto mu = poisson_convolve(SpectralMeasure::atom(0.0), 0.7);
  const auto grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(szego_mean(mu, grid));
}
BENCHMARK(BM_SzegoQuadrature)->Arg(4096)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);

void BM_SzegoMahler(benchmark::State& state) {
  const auto mu = SpectralMeasure::trig_density(TrigPoly(-1, {1.0, 2.0, 1.0}));
  for (auto _ : state) benchmark::DoNotOptimize(szego_mean(mu));
}
BENCHMARK(BM_SzegoMahler)->Unit(benchmark::kMicrosecond);

void BM_CnOracle(benchmark::State& state) {
  const auto mu = SpectralMeasure::trig_density(TrigPoly(-1, {1.0, 2.0, 1.0}));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cn_oracle(mu, 2, n));
}
BENCHMARK(BM_CnOracle)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_TwoWeightCheck(benchmark::State& state) {
  const auto mu = SpectralMeasure::atom(0.0) + SpectralMeasure::lebesgue(0.5);
  HankelOptions opts;
  opts.grid = static_cast<std::size_t>(state.range(0));
  const TrigPoly f(1, {1.0, 0.5, 0.25});
  for (auto _ : state) benchmark::DoNotOptimize(two_weight_check(mu, 0.7, f, opts));
}
BENCHMARK(BM_TwoWeightCheck)->Arg(1024)->Arg(8192)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
