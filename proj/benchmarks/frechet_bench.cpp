#include <benchmark/benchmark.h>

#include "frechet/euclidean.hpp"
#include "frechet/frechet_solver.hpp"
#include "frechet/hull.hpp"
#include "frechet/random.hpp"
#include "frechet/random_space.hpp"
#include "frechet/search.hpp"

namespace {

using namespace frechet;

void BM_MeanSet(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto space = random_space(1, n, SpaceStrategy::RandomGraph);
  Rng rng(2);
  FrechetProblem p{1.5, {}};
  for (int i = 0; i < 6; ++i) {
    p.args.push_back({rng.uniform(1, 5), Subset{rng.between(0, n - 1), rng.between(0, n - 1)}});
  }
  for (auto _ : state) benchmark::DoNotOptimize(mean_set(space, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MeanSet)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_FloydWarshall(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_space(++seed, n, SpaceStrategy::MetricRepair));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FloydWarshall)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_HullMembers(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto space = random_space(3, n, SpaceStrategy::EuclideanSample);
  const Subset base{0, 1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(hull_members(space, base, 2.0));
}
BENCHMARK(BM_HullMembers)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_HullGridOracle(benchmark::State& state) {
  const auto space = random_space(3, 8, SpaceStrategy::EuclideanSample);
  const Subset base{0, 1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(hull_grid_oracle(space, base, 2.0, 20));
}
BENCHMARK(BM_HullGridOracle);

euclid::EuclideanProblem cloud(std::size_t n, double order) {
  Rng rng(4);
  euclid::EuclideanProblem p;
  p.order = order;
  for (std::size_t i = 0; i < n; ++i) {
    p.points.push_back((euclid::Point(3) << rng.unit(), rng.unit(), rng.unit()).finished());
    p.weights.push_back(rng.uniform(0.5, 2));
  }
  return p;
}

void BM_Weiszfeld(benchmark::State& state) {
  const auto p = cloud(static_cast<std::size_t>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(euclid::geometric_median_weiszfeld(p));
}
BENCHMARK(BM_Weiszfeld)->Arg(16)->Arg(256)->Arg(4096);

void BM_Descent(benchmark::State& state) {
  const auto p = cloud(static_cast<std::size_t>(state.range(0)), 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(euclid::general_r_descent(p));
}
BENCHMARK(BM_Descent)->Arg(16)->Arg(256)->Arg(4096);

void BM_Search(benchmark::State& state) {
  lab::SearchConfig config;
  config.trials = 1000;
  config.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lab::search_counterexamples(config));
}
BENCHMARK(BM_Search)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
