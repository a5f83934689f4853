#include <golden/catalog.hpp>
#include <golden/expr.hpp>
#include <golden/golden_ring.hpp>
#include <golden/sequences.hpp>
#include <golden/verifier.hpp>

#include <benchmark/benchmark.h>

static void BM_Fib(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(golden::fib(n));
}
BENCHMARK(BM_Fib)->Arg(100)->Arg(1000)->Arg(100000)->Arg(1000000);

static void BM_FibUncached(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(golden::fib_uncached(n));
}
BENCHMARK(BM_FibUncached)->Arg(100)->Arg(500);

static void BM_RingPow(benchmark::State& state) {
  golden::GoldenNum x(golden::Rational(3, 7), golden::Rational(-2, 5));
  long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(golden::ring_pow(x, n));
}
BENCHMARK(BM_RingPow)->Arg(16)->Arg(256)->Arg(-256);

static void BM_AlphaPow(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(golden::alpha_pow(n));
}
BENCHMARK(BM_AlphaPow)->Arg(256)->Arg(100000);

static void BM_ParseCatalog(benchmark::State& state) {
  const auto& cat = golden::load_catalog();
  for (auto _ : state) {
    for (const auto& e : cat) benchmark::DoNotOptimize(golden::parse_identity(e.dsl));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cat.size()));
}
BENCHMARK(BM_ParseCatalog);

static void BM_Sweep(benchmark::State& state, const char* id) {
  const auto* entry = golden::find_entry(id);
  golden::SweepSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(golden::sweep(*entry, spec));
}
BENCHMARK_CAPTURE(BM_Sweep, addition, "D1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, three_index, "I1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, series, "H1")->Unit(benchmark::kMillisecond);

static void BM_SeriesCheck(benchmark::State& state) {
  long order = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(golden::series_check(3, 2, order, golden::SeriesKind::Fib));
  }
}
BENCHMARK(BM_SeriesCheck)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
