#include <benchmark/benchmark.h>

#include "singlab/monodromy.hpp"

using namespace singlab;

static void BM_CharPolyEnumeration(benchmark::State& state) {
    DiagonalSingularity s({static_cast<std::int64_t>(state.range(0)), 7, 8, 9});
    for (auto _ : state) {
        auto cm = char_poly(s);
        benchmark::DoNotOptimize(cm.multiplicities().size());
    }
}
BENCHMARK(BM_CharPolyEnumeration)->Arg(6)->Arg(12)->Arg(24);

static void BM_MatrixCharPoly(benchmark::State& state) {
    DiagonalSingularity s({2, static_cast<std::int64_t>(state.range(0)) + 1, 13});
    auto m = integral_monodromy(s);
    for (auto _ : state) {
        auto cp = characteristic_polynomial(m);
        benchmark::DoNotOptimize(cp.back());
    }
    state.SetComplexityN(static_cast<int>(m.rows()));
}
BENCHMARK(BM_MatrixCharPoly)->Arg(2)->Arg(4)->Arg(6)->Complexity();

static void BM_ClassifyLink(benchmark::State& state) {
    DiagonalSingularity s({2, 2, static_cast<std::int64_t>(state.range(0)), 18});
    for (auto _ : state) {
        auto c = classify_link(s);
        benchmark::DoNotOptimize(c.kind);
    }
}
BENCHMARK(BM_ClassifyLink)->Arg(6)->Arg(12)->Arg(24);
