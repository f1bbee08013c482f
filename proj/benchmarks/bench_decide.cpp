#include <benchmark/benchmark.h>

#include <cmath>

#include "footsort/classifier.hpp"
#include "footsort/decider.hpp"
#include "footsort/generators.hpp"
#include "footsort/oracle.hpp"

using namespace footsort;

namespace {

template <class Make>
void run_decide(benchmark::State& state, Make make) {
  gen::Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const SockOrdering s = make(rng, n);
  DecideReport report;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide(s, &report));
  }
  const double nn = static_cast<double>(s.size());
  state.counters["map_ops"] = static_cast<double>(report.map_ops);
  state.counters["ops_per_nlogn"] = static_cast<double>(report.map_ops) / (nn * std::log2(nn + 2));
  state.SetComplexityN(state.range(0));
}

void BM_DecideRandom(benchmark::State& state) {
  run_decide(state, [](gen::Rng& r, std::size_t n) { return gen::random_ordering(r, n, n / 2); });
}
void BM_DecideTwoBounded(benchmark::State& state) {
  run_decide(state, [](gen::Rng& r, std::size_t n) { return gen::random_two_bounded(r, n); });
}
void BM_DecideSortable(benchmark::State& state) {
  run_decide(state, [](gen::Rng& r, std::size_t n) { return gen::random_sortable(r, n, 2); });
}
void BM_DecideChain(benchmark::State& state) {
  run_decide(state, [](gen::Rng&, std::size_t n) { return gen::chain(n); });
}
void BM_DecideFamilyA(benchmark::State& state) {
  run_decide(state, [](gen::Rng&, std::size_t n) {
    return generate_family(Family::kA, static_cast<int>((n - 3) / 2)).ordering.ordering();
  });
}

void BM_CheckWithOrder(benchmark::State& state) {
  gen::Rng rng(2);
  const SockOrdering s = gen::random_sortable(rng, static_cast<std::size_t>(state.range(0)), 2);
  const auto cert = decide(s).certificate();
  for (auto _ : state) benchmark::DoNotOptimize(oracle::check_with_order(s, cert));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_DecideRandom)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_DecideTwoBounded)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_DecideSortable)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_DecideChain)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_DecideFamilyA)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_CheckWithOrder)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNLogN);

BENCHMARK_MAIN();
