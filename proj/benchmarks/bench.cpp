#include <benchmark/benchmark.h>

#include "famind/corpus.hpp"
#include "famind/factors.hpp"
#include "famind/independence.hpp"
#include "famind/jordan.hpp"
#include "famind/lie_orders.hpp"
#include "famind/matrix_group.hpp"

using namespace famind;

static void BM_EnumerateSymmetric(benchmark::State& state) {
  int n = int(state.range(0));
  for (auto _ : state) {
    FiniteGroup g = symmetric_group(n);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_EnumerateSymmetric)->Arg(5)->Arg(6)->Arg(7);

static void BM_MatrixGroupSL2(benchmark::State& state) {
  uint64_t p = uint64_t(state.range(0));
  for (auto _ : state) {
    FiniteGroup g = make_matrix_group(2, p, {{{1, 1}, {0, 1}}, {{0, 1}, {p - 1, 0}}});
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_MatrixGroupSL2)->Arg(5)->Arg(7)->Arg(11);

static void BM_SigmaCatalogue(benchmark::State& state) {
  BigUint bound = BigUint(10).pow(uint64_t(state.range(0)));
  for (auto _ : state) {
    SigmaCatalogue cat = sigma_catalogue(5, bound);
    benchmark::DoNotOptimize(cat.entries.size());
  }
}
BENCHMARK(BM_SigmaCatalogue)->Arg(6)->Arg(12)->Arg(24);

static void BM_CompositionFactors(benchmark::State& state) {
  FiniteGroup g = symmetric_group(int(state.range(0)));
  for (auto _ : state) {
    auto factors = composition_factors(g);
    benchmark::DoNotOptimize(factors.size());
  }
}
BENCHMARK(BM_CompositionFactors)->Arg(4)->Arg(5)->Arg(6);

static void BM_JordanIndex(benchmark::State& state) {
  FiniteGroup g = symmetric_group(int(state.range(0)));
  for (auto _ : state) {
    JordanResult r = jordan_index(g);
    benchmark::DoNotOptimize(r.index);
  }
}
BENCHMARK(BM_JordanIndex)->Arg(4)->Arg(5);

static void BM_AnalyzeScenario(benchmark::State& state) {
  HomFamily family = truncation_scenario(3, int(state.range(0)));
  for (auto _ : state) {
    IndependenceReport report = analyze_family(family, 0);
    benchmark::DoNotOptimize(report.satisfies_r);
  }
}
BENCHMARK(BM_AnalyzeScenario)->Arg(3)->Arg(4);

static void BM_FrobeniusBound(benchmark::State& state) {
  for (auto _ : state) {
    BigUint b = frobenius_bound(uint64_t(state.range(0)));
    benchmark::DoNotOptimize(b.bit_length());
  }
}
BENCHMARK(BM_FrobeniusBound)->Arg(3)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
