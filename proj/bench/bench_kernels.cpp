// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <vector>

#include "screening/kernels.hpp"
#include "screening/scores.hpp"

namespace {

using namespace screening;

const ModelConfig& config() {
  static const ModelConfig c = ModelConfig::baseline();
  return c;
}

std::vector<double> thetas(std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = -2.0 + 5.0 * static_cast<double>(i) / (n - 1);
  return out;
}

template <bool Parallel>
void BM_ScoreGrid(benchmark::State& state) {
  const auto th = thetas(static_cast<std::size_t>(state.range(0)));
  const auto taus = clamped_tau_grid(config().payoffs(), 400);
  std::vector<ScorePoint> out(th.size() * taus.size());
  for (auto _ : state) {
    if constexpr (Parallel) {
      omp::score_grid(config(), th, taus, out);
    } else {
      serial::score_grid(config(), th, taus, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

template <bool Parallel>
void BM_Sample(benchmark::State& state) {
  std::vector<Applicant> out(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel) {
      omp::sample_applicants(config(), 7, 0, out);
    } else {
      serial::sample_applicants(config(), 7, 0, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_PairedRegret(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  std::vector<Applicant> pop(m);
  serial::sample_applicants(config(), 7, 1, pop);
  std::vector<double> u1(m), u2(m);
  for (auto _ : state) {
    if constexpr (Parallel) {
      omp::paired_regret(config(), pop, 0.1, u1, u2);
      benchmark::DoNotOptimize(omp::blocked_sum(u1) + omp::blocked_sum(u2));
    } else {
      serial::paired_regret(config(), pop, 0.1, u1, u2);
      benchmark::DoNotOptimize(serial::blocked_sum(u1) + serial::blocked_sum(u2));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ScoreGrid<false>)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreGrid<true>)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sample<false>)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sample<true>)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairedRegret<false>)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairedRegret<true>)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
