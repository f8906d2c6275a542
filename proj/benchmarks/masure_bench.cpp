#include <benchmark/benchmark.h>

#include "masure/galleries.hpp"
#include "masure/heckepath.hpp"
#include "masure/parse.hpp"
#include "masure/sl2engine.hpp"

using namespace masure;

static void BM_RetractGN(benchmark::State& state) {
  const auto w = word_gN(state.range(0));
  for (auto _ : state) {
    RetractResult r = retract_segment(w, 0, 1);
    benchmark::DoNotOptimize(r.fold_points.size());
  }
}
BENCHMARK(BM_RetractGN)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_RetractGPrimeN(benchmark::State& state) {
  const auto w = word_gprimeN(state.range(0));
  RetractOptions opts;
  opts.k_bound = 256;
  for (auto _ : state) {
    RetractResult r = retract_segment(w, 0, 1, opts);
    benchmark::DoNotOptimize(r.fold_points.size());
  }
}
BENCHMARK(BM_RetractGPrimeN)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_TheoremCount(benchmark::State& state) {
  RetractResult r = retract_segment(word_gN(state.range(0)), 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(theorem_count(*r.superdecoration).n);
}
BENCHMARK(BM_TheoremCount)->Arg(2)->Arg(4);

static void BM_BruteForceLiftings(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  GalleryType type;
  std::vector<bool> folds, thick;
  for (int i = 0; i < len; ++i) {
    type.push_back(i % 2);
    folds.push_back(false);
    thick.push_back(i % 3 == 0);
  }
  Gallery g = make_gallery(-1, 0, type, folds, thick);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_liftings(g, -1, 0, 3));
}
BENCHMARK(BM_BruteForceLiftings)->Arg(4)->Arg(8)->Arg(12);

static void BM_Membership(benchmark::State& state) {
  const GroupElement g = g_counterexample();
  const auto tag = static_cast<SetTag>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(membership(g, tag).verdict);
}
BENCHMARK(BM_Membership)->DenseRange(0, 6);

static void BM_CounterexampleReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(counterexample_report(state.range(0)).all_pass());
}
BENCHMARK(BM_CounterexampleReport)->Arg(8)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_RationalUArithmetic(benchmark::State& state) {
  const RationalU a = parse_rational_u("(w*u^3+u^-1)/(1+w^2*u^2)");
  const RationalU b = parse_rational_u("(u-w)/(1-w^-1*u)");
  for (auto _ : state) {
    RationalU c = (a + b) * (a - b) / (a * b + 1);
    benchmark::DoNotOptimize(c.is_zero());
  }
}
BENCHMARK(BM_RationalUArithmetic);

BENCHMARK_MAIN();
