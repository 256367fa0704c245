#include <benchmark/benchmark.h>

#include "sedr/filters.hpp"
#include "sedr/model.hpp"
#include "sedr/oracle.hpp"
#include "sedr/sweep.hpp"

namespace {

void BM_NormalizedPoint(benchmark::State& state) {
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sedr::model::normalized_point({x, 0.3, 0.02}));
    x = x < 3.0 ? x + 1e-6 : 0.3;
  }
}
BENCHMARK(BM_NormalizedPoint);

void BM_SpectralPoint(benchmark::State& state) {
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sedr::model::error_disturbance_spectra({x, 0.3, 0.02}));
    x = x < 3.0 ? x + 1e-6 : 0.3;
  }
}
BENCHMARK(BM_SpectralPoint);

void BM_FrequencySweep(benchmark::State& state) {
  const auto grid =
      sedr::sweep::linspace(0.1, 3.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sedr::sweep::frequency_sweep(0.3, 0.02, grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FrequencySweep)->Arg(500)->Arg(5000);

void BM_OptimizeSigma(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sedr::sweep::optimize_sigma(0.3));
  }
}
BENCHMARK(BM_OptimizeSigma);

void BM_FilteredOzawa(benchmark::State& state) {
  const sedr::filters::FilterSpec filter(1.0, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sedr::filters::filtered_ozawa(filter, 0.3, 0.02));
  }
}
BENCHMARK(BM_FilteredOzawa);

void BM_Synthesize(benchmark::State& state) {
  sedr::oracle::SimulationConfig config;
  config.n_samples = static_cast<std::size_t>(state.range(0));
  config.welch.segment_length =
      std::min<std::size_t>(config.n_samples, 1u << 13);
  const sedr::oracle::Spectrum flat = [](double) { return 2.0; };
  for (auto _ : state) {
    benchmark::DoNotOptimize(sedr::oracle::synthesize(flat, config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Synthesize)->Arg(1 << 14)->Arg(1 << 18);

void BM_WelchPsd(benchmark::State& state) {
  sedr::oracle::SimulationConfig config;
  config.n_samples = 1u << 17;
  const auto series =
      sedr::oracle::synthesize([](double) { return 2.0; }, config);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sedr::oracle::welch_psd(series, config.welch));
  }
}
BENCHMARK(BM_WelchPsd);

}  // namespace

BENCHMARK_MAIN();
