#include <benchmark/benchmark.h>

#include "metdim/bounds.hpp"
#include "metdim/constructions.hpp"
#include "metdim/designs.hpp"
#include "metdim/verify.hpp"

using namespace metdim;

static void BM_RankUnrank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const std::uint64_t total = binomial(n, k);
  std::uint64_t r = 0;
  for (auto _ : state) {
    const KSubset s = unrank_colex(n, k, r);
    benchmark::DoNotOptimize(rank_colex(s));
    r = (r + 7919) % total;
  }
}
BENCHMARK(BM_RankUnrank)->Args({20, 5})->Args({100, 4})->Args({256, 6});

static void BM_CursorSweep(benchmark::State& state) {
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for (ColexCursor c(24, 5); !c.done(); c.next()) acc += c.current().words()[0];
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(binomial(24, 5)));
}
BENCHMARK(BM_CursorSweep);

static void BM_VerifyKneserPartition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = GraphInstance::kneser(n, 4);
  const auto members = kneser_partition(n, 4).members;
  VerifyOptions o;
  o.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_resolving(g, members, o).resolved);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(binomial(n, 4)));
}
BENCHMARK(BM_VerifyKneserPartition)->Args({24, 1})->Args({24, 4})->Args({40, 4})->Unit(benchmark::kMillisecond);

static void BM_VerifyPG3Witness(benchmark::State& state) {
  const auto g = GraphInstance::kneser(13, 4);
  const auto lines = projective_plane(3).blocks;
  for (auto _ : state) benchmark::DoNotOptimize(verify_resolving(g, lines).resolved);
}
BENCHMARK(BM_VerifyPG3Witness)->Unit(benchmark::kMillisecond);

static void BM_ExactSolver(benchmark::State& state) {
  const auto g = GraphInstance::johnson(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_metric_dimension(g).dimension);
}
BENCHMARK(BM_ExactSolver)->Args({7, 2})->Args({8, 2})->Args({7, 3})->Unit(benchmark::kMillisecond);

static void BM_Greedy(benchmark::State& state) {
  const auto g = GraphInstance::kneser(12, 4);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_resolving_set(g).size());
}
BENCHMARK(BM_Greedy)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
