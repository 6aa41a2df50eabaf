#include <benchmark/benchmark.h>

#include "epzeta/hecke.hpp"
#include "epzeta/verify.hpp"
#include "epzeta/zeta.hpp"

using namespace epzeta;

namespace {

void BM_NormalForm(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    const CoxeterSystem sys = system_affine_a2();  // fresh cache each round
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(i % 3);
    state.ResumeTiming();
    benchmark::DoNotOptimize(sys.normal_form(w));
  }
}
BENCHMARK(BM_NormalForm)->Arg(6)->Arg(10)->Arg(14);

void BM_Enumerate(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    const CoxeterSystem sys = system_affine_a2();
    state.ResumeTiming();
    benchmark::DoNotOptimize(sys.counts_by_length(bound));
  }
  state.SetItemsProcessed(state.iterations() * bound);
}
BENCHMARK(BM_Enumerate)->Arg(8)->Arg(12);

void BM_GrowthSeries(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    const CoxeterSystem sys = system_affine_a2();
    state.ResumeTiming();
    benchmark::DoNotOptimize(sys.growth_series());
  }
}
BENCHMARK(BM_GrowthSeries);

void BM_HeckeProduct(benchmark::State& state) {
  const HeckeAlgebraQ alg(system_affine_a2(), BigRational(2));
  HeckeElement<BigRational> a = alg.zero();
  for (int l = 0; l < 5; ++l) {
    Word w;
    for (int k = 0; k < l; ++k) w.push_back(k % 3);
    a = alg.add(a, alg.basis(w));
  }
  for (auto _ : state) benchmark::DoNotOptimize(alg.mult(a, a));
}
BENCHMARK(BM_HeckeProduct);

void BM_ParabolicZeta(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    const CoxeterSystem sys = system_affine_a2();
    state.ResumeTiming();
    benchmark::DoNotOptimize(
        zeta_parabolic(ParabolicZetaData(sys, BigInt(2), {0, 1}, 10)));
  }
}
BENCHMARK(BM_ParabolicZeta);

}  // namespace

BENCHMARK_MAIN();
