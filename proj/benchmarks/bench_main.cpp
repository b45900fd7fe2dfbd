#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tadpole/density_peaks.hpp"
#include "tadpole/edit_distance.hpp"
#include "tadpole/engine.hpp"
#include "tadpole/generators.hpp"
#include "tadpole/measures.hpp"
#include "tadpole/preprocess.hpp"

namespace {

std::vector<double> walk(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  double acc = 0.0;
  for (auto& x : v) x = acc += g(rng);
  return v;
}

void BM_Dtw(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = walk(n, 1), b = walk(n, 2);
  const std::size_t r = tadpole::band_radius(n, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(tadpole::dtw(a, b, r));
}
BENCHMARK(BM_Dtw)->Arg(128)->Arg(512)->Arg(2048);

void BM_LbSymmetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = walk(n, 1), b = walk(n, 2);
  const std::size_t r = tadpole::band_radius(n, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(tadpole::lb_symmetric(a, b, r));
}
BENCHMARK(BM_LbSymmetric)->Arg(128)->Arg(512)->Arg(2048);

void BM_EditDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> sym(0, 3);
  std::string s(n, 'A'), t(n, 'A');
  for (auto& c : s) c = "ACGT"[sym(rng)];
  for (auto& c : t) c = "ACGT"[sym(rng)];
  for (auto _ : state) benchmark::DoNotOptimize(tadpole::edit_distance(s, t));
}
BENCHMARK(BM_EditDistance)->Arg(100)->Arg(400);

void BM_BoundMatrices(benchmark::State& state) {
  const auto ds = tadpole::znormalize(
      tadpole::generate_cbf(static_cast<std::size_t>(state.range(0)), 128, 0));
  for (auto _ : state) benchmark::DoNotOptimize(tadpole::bound_matrices(ds, 0.05));
}
BENCHMARK(BM_BoundMatrices)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_TadpoleCluster(benchmark::State& state) {
  const auto ds = tadpole::znormalize(
      tadpole::generate_cbf(static_cast<std::size_t>(state.range(0)), 128, 0));
  const auto problem = tadpole::time_series_problem(ds, 0.05);
  const double dc = tadpole::percentile_cutoff(problem.bounds, 2.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(tadpole::tadpole_cluster(problem, tadpole::TadpoleOptions{dc, 3}));
}
BENCHMARK(BM_TadpoleCluster)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_BruteForceCluster(benchmark::State& state) {
  const auto ds = tadpole::znormalize(
      tadpole::generate_cbf(static_cast<std::size_t>(state.range(0)), 128, 0));
  const auto problem = tadpole::time_series_problem(ds, 0.05);
  const double dc = tadpole::percentile_cutoff(problem.bounds, 2.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        tadpole::dp_cluster(ds, tadpole::Measure::dtw, 0.05, dc, std::size_t{3}));
}
BENCHMARK(BM_BruteForceCluster)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
