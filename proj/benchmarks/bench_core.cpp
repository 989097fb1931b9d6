#include <benchmark/benchmark.h>

#include "ospl/frobenius.hpp"
#include "ospl/linkage.hpp"
#include "ospl/rootdata.hpp"
#include "ospl/sl2.hpp"
#include "ospl/spo21.hpp"

using namespace ospl;

static void BM_BinomMod(benchmark::State& state) {
    const Prime p(3);
    const i64 n = state.range(0);
    for (auto _ : state) {
        int acc = 0;
        for (i64 k = 0; k <= n; ++k) acc += binom_mod(n, k, p);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_BinomMod)->Arg(100)->Arg(10000)->Arg(1000000);

static void BM_DecomposeSl2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(decompose_sl2(state.range(0), Prime(3)));
}
BENCHMARK(BM_DecomposeSl2)->Arg(80)->Arg(728)->Arg(59048);

static void BM_CompFactorsSpo(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(comp_factors_H0_spo(state.range(0), Prime(3)));
}
BENCHMARK(BM_CompFactorsSpo)->Arg(80)->Arg(728)->Arg(59048);

static void BM_CompFactorsR(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const i64 l = ipow(3, r) + 1;
    for (auto _ : state) benchmark::DoNotOptimize(comp_factors_r(l, r, Prime(3)));
}
BENCHMARK(BM_CompFactorsR)->DenseRange(1, 4);

static void BM_BuildGraph(benchmark::State& state) {
    const GroupShape shape{1, 1, ParityType::ODD};
    const i64 hi = state.range(0);
    const Box box{{0, 0}, {hi, hi}};
    for (auto _ : state) benchmark::DoNotOptimize(build_graph(box, shape, {1, 2}, Prime(3)));
}
BENCHMARK(BM_BuildGraph)->Arg(9)->Arg(27);

static void BM_CharZrFlag(benchmark::State& state) {
    const GroupShape shape{static_cast<int>(state.range(0)), 1, ParityType::ODD};
    WeightVec lambda(shape.rank());
    const Flag flag = Flag::standard(shape);
    for (auto _ : state) benchmark::DoNotOptimize(ch_Zr_flag(lambda, flag, shape, 1, Prime(3)));
}
BENCHMARK(BM_CharZrFlag)->DenseRange(1, 2);

BENCHMARK_MAIN();
