#include <benchmark/benchmark.h>

#include <numbers>

#include "polyfisher/families.hpp"
#include "polyfisher/fisher.hpp"
#include "polyfisher/gamma.hpp"

using namespace polyfisher;

namespace {

void BM_Recurrence2F1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ZMap map{1.0 - 1.0 / 0.4, 1.0 / 0.16, 1.5};
  for (auto _ : state)
    benchmark::DoNotOptimize(recurrence_2f1(n, 7.3, map));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Recurrence2F1)->Arg(10)->Arg(50);

void BM_Series2F1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(series_2f1_terminating(n, 7.3, 1.5, -1.5));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Series2F1)->Arg(10)->Arg(50);

void BM_AbsGammaSq(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(abs_gamma_sq(1.5, x));
    x += 0.25;
    if (x > 40.0)
      x = 0.0;
  }
}
BENCHMARK(BM_AbsGammaSq);

void BM_FisherSummandCharlier(benchmark::State& state) {
  const FamilySpec spec = Charlier{2.0};
  long x = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fisher_summand(spec, 5, static_cast<double>(x)));
    x = (x + 1) % 60;
  }
}
BENCHMARK(BM_FisherSummandCharlier);

void BM_FisherNumericDiscrete(benchmark::State& state) {
  const FamilySpec spec = Meixner{3.5, 0.9}; // longest tail on the test grid
  for (auto _ : state)
    benchmark::DoNotOptimize(fisher_numeric(spec, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FisherNumericDiscrete)->Arg(0)->Arg(10);

void BM_FisherNumericQuadrature(benchmark::State& state) {
  const FamilySpec spec = MeixnerPollaczek{1.0, std::numbers::pi / 4.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(fisher_numeric(spec, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FisherNumericQuadrature)->Arg(0)->Arg(8);

} // namespace

BENCHMARK_MAIN();
