#include <benchmark/benchmark.h>
#include <omp.h>

#include <map>

#include "grounded/construct.hpp"
#include "grounded/corpus.hpp"
#include "grounded/heaviness.hpp"

using namespace grounded;

namespace {

// A cycle on k vertices with an extra vertex over every other pair (2i, 2i+2):
// at most 1-heavy, so it is representable at any size. About n vertices total.
graph eared_cycle(int n) {
  int k = std::max(4, (2 * n / 3) & ~1);
  std::vector<std::pair<vertex, vertex>> es;
  for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
  int next = k;
  for (int i = 0; i < k; i += 2) {
    es.emplace_back(i, next);
    es.emplace_back(next, (i + 2) % k);
    ++next;
  }
  return graph(next, es);
}

representation drawing(int n) {
  static std::map<int, representation> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, construct_representation(eared_cycle(n))).first;
  return it->second;
}

void bm_crossings_parallel(benchmark::State& state) {
  representation rep = drawing(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(crossings(rep));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_crossings_serial(benchmark::State& state) {
  representation rep = drawing(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(crossings_serial(rep));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_decide_cycle(benchmark::State& state) {
  omp_set_num_threads(1);
  graph g = make_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decide(g));
  state.SetComplexityN(state.range(0));
}

void bm_decide_sp_random(benchmark::State& state) {
  omp_set_num_threads(1);
  graph g = sp_random(static_cast<int>(state.range(0)), 2024);
  for (auto _ : state) benchmark::DoNotOptimize(decide(g));
  state.SetComplexityN(state.range(0));
}

void bm_construct(benchmark::State& state) {
  graph g = eared_cycle(static_cast<int>(state.range(0)));
  construct_options opt;
  opt.verify_result = false;
  for (auto _ : state) benchmark::DoNotOptimize(construct_representation(g, opt));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(bm_crossings_parallel)->Arg(1000)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_crossings_serial)->Arg(1000)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_decide_cycle)->RangeMultiplier(2)->Range(1 << 14, 1 << 20)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(bm_decide_sp_random)->RangeMultiplier(2)->Range(1 << 14, 1 << 20)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(bm_construct)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
