#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include <capset/constructions.hpp>
#include <capset/sweep.hpp>
#include <capset/verifiers.hpp>

using namespace capset;

namespace {

std::vector<std::pair<Point, Point>> random_pairs(int dim, std::size_t count) {
  std::mt19937_64 rng(42);
  std::vector<std::pair<Point, Point>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.emplace_back(unrank(rng() % pow3(dim), dim), unrank(rng() % pow3(dim), dim));
  }
  return out;
}

void BM_ThirdRankPacked(benchmark::State& state) {
  const auto pairs = random_pairs(15, 4096);
  for (auto _ : state) {
    for (const auto& [a, b] : pairs) benchmark::DoNotOptimize(third_rank_packed(a, b));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}
BENCHMARK(BM_ThirdRankPacked);

void BM_ThirdRankReference(benchmark::State& state) {
  const auto pairs = random_pairs(15, 4096);
  for (auto _ : state) {
    for (const auto& [a, b] : pairs) benchmark::DoNotOptimize(third_rank_reference(a, b));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}
BENCHMARK(BM_ThirdRankReference);

void BM_SweepCoverage(benchmark::State& state) {
  // One C3-type block of the flagship: P6^2 x B3 x P6^2, 51200 points at dim 15.
  const auto parts = ag15_parts();
  const auto set = product({parts.p6_2, gen_B(3), parts.p6_2}).with_membership();
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sub = PointSet::from_sorted(15, {set.begin(), set.begin() + n}).with_membership();
  SweepTask task;
  task.set = &sub;
  task.mode = SweepMode::kCapAndCoverage;
  task.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(task).pairs_examined);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pair_count(n)));
}
BENCHMARK(BM_SweepCoverage)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

void BM_CapNaiveVsSweep(benchmark::State& state) {
  const auto set = preset_ag6_112(Parity::kEven).with_membership();
  const VerifyOptions fast{1, CheckPath::kFast, nullptr};
  for (auto _ : state) {
    if (state.range(0) == 0) {
      benchmark::DoNotOptimize(is_cap_naive(set).passed);
    } else {
      benchmark::DoNotOptimize(is_cap_sweep(set, fast).passed);
    }
  }
}
BENCHMARK(BM_CapNaiveVsSweep)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
