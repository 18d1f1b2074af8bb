#include <benchmark/benchmark.h>

#include "skein/diagram.hpp"
#include "skein/generators.hpp"
#include "skein/homfly.hpp"
#include "skein/laurent.hpp"
#include "skein/seifert.hpp"

namespace {

using skein::LinkDiagram;

LinkDiagram torus2(int n) { return skein::gen::torus(2, n); }

void BM_homfly_torus2_memoized(benchmark::State& state) {
  LinkDiagram d = torus2(static_cast<int>(state.range(0)));
  skein::HomflyOptions opt{16, true};
  for (auto _ : state)
    benchmark::DoNotOptimize(skein::homfly(d, opt));
}
BENCHMARK(BM_homfly_torus2_memoized)->Arg(6)->Arg(10)->Arg(14);

void BM_homfly_torus2_unmemoized(benchmark::State& state) {
  LinkDiagram d = torus2(static_cast<int>(state.range(0)));
  skein::HomflyOptions opt{16, false};
  for (auto _ : state)
    benchmark::DoNotOptimize(skein::homfly(d, opt));
}
BENCHMARK(BM_homfly_torus2_unmemoized)->Arg(6)->Arg(10)->Arg(14);

void BM_homfly_torus3(benchmark::State& state) {
  LinkDiagram d = skein::gen::torus(3, static_cast<int>(state.range(0)));
  skein::HomflyOptions opt{16, true};
  for (auto _ : state)
    benchmark::DoNotOptimize(skein::homfly(d, opt));
}
BENCHMARK(BM_homfly_torus3)->Arg(4)->Arg(6)->Arg(8);

void BM_canonical_code(benchmark::State& state) {
  LinkDiagram d = torus2(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(d.canonical_code());
}
BENCHMARK(BM_canonical_code)->Arg(8)->Arg(16);

void BM_seifert_analysis(benchmark::State& state) {
  LinkDiagram d = skein::gen::rational({3, 2, 2});
  for (auto _ : state) {
    auto g = skein::SignedGraph::from_diagram(d);
    benchmark::DoNotOptimize(skein::analyze(g));
  }
}
BENCHMARK(BM_seifert_analysis);

void BM_laurent_delta_product(benchmark::State& state) {
  skein::LaurentPoly2 delta = skein::LaurentPoly2::delta_power(1);
  for (auto _ : state) {
    skein::LaurentPoly2 acc(1);
    for (int i = 0; i < 12; ++i) acc = acc * delta;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_laurent_delta_product);

}  // namespace

BENCHMARK_MAIN();
