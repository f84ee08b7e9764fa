#include "evenquads/cap.hpp"
#include "evenquads/classify.hpp"
#include "evenquads/deck.hpp"
#include "evenquads/enumerate.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace evenquads;

namespace {

// Greedy random cap of up to k points in Z_2^n.
std::vector<Point> random_cap(int n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Cap cap(n);
  for (int tries = 0; cap.size() < k && tries < 4096; ++tries) {
    const Point p(n, static_cast<std::uint32_t>(rng() % (1u << n)));
    if (cap.contains(p)) continue;
    std::vector<Point> grown(cap.points().begin(), cap.points().end());
    grown.push_back(p);
    if (is_cap(grown)) cap = Cap(n, grown);
  }
  return {cap.points().begin(), cap.points().end()};
}

void BM_IsCap(benchmark::State& state) {
  const auto pts = random_cap(8, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_cap(pts));
}
BENCHMARK(BM_IsCap)->Arg(6)->Arg(9)->Arg(14);

void BM_ExcludeMap(benchmark::State& state) {
  const Cap cap(8, random_cap(8, static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(exclude_map(cap));
}
BENCHMARK(BM_ExcludeMap)->Arg(6)->Arg(9)->Arg(14);

void BM_Classify(benchmark::State& state) {
  const Cap cap(6, random_cap(6, 9, 3));
  for (auto _ : state) benchmark::DoNotOptimize(classify(cap));
}
BENCHMARK(BM_Classify);

void BM_FindQuads(benchmark::State& state) {
  const auto layout = deal(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_all_quads(layout));
}
BENCHMARK(BM_FindQuads)->Arg(8)->Arg(12)->Arg(20);

void BM_EnumerateN5(benchmark::State& state) {
  const EnumerationOptions opts{5, 10, 1, state.range(0) != 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_census(opts));
}
BENCHMARK(BM_EnumerateN5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateN6K6(benchmark::State& state) {
  const EnumerationOptions opts{6, 6, 1, false, 0};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_census(opts));
}
BENCHMARK(BM_EnumerateN6K6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
