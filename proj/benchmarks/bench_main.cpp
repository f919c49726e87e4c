#include <benchmark/benchmark.h>

#include "mpap/triangles.hpp"

using namespace mpap;

static void BM_CountTableM2(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CountTable t = count_table(Family::M2, n, n);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_CountTableM2)->Arg(8)->Arg(10)->Arg(12);

static void BM_ClosedForms(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GfBundle b = gf_closed_forms(Family::M1, order, 12);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_ClosedForms)->Arg(16)->Arg(24)->Arg(32);

static void BM_SeriesMul(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  USeries a(order), b(order);
  for (int i = 0; i <= order; ++i) {
    a.set(i, Rat(i + 1));
    b.set(i, Rat(2 * i + 1));
  }
  for (auto _ : state) {
    USeries c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_SeriesMul)->Arg(64)->Arg(128);

static void BM_RecurrenceTriangle(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Triangle t = build_triangle(Family::M1, Route::Recurrence, n, n);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_RecurrenceTriangle)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
