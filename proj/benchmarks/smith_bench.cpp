#include <benchmark/benchmark.h>

#include <random>

#include "singlab/monodromy.hpp"
#include "singlab/smith.hpp"

using namespace singlab;

static void BM_SmithMonodromy(benchmark::State& state) {
    const auto m = state.range(0);
    DiagonalSingularity s({2, 2, m, m});
    auto mono = integral_monodromy(s);
    auto shifted = mono - IntegerMatrix::identity(mono.rows());
    for (auto _ : state) {
        auto f = smith_normal_form(shifted, SnfOptions{false});
        benchmark::DoNotOptimize(f.rank);
    }
    state.SetComplexityN(static_cast<int>(shifted.rows()));
}
BENCHMARK(BM_SmithMonodromy)->Arg(8)->Arg(16)->Arg(24)->Complexity();

static void BM_SmithDenseRandomWithTransforms(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-9, 9);
    const auto n = static_cast<std::size_t>(state.range(0));
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    for (auto _ : state) {
        auto f = smith_normal_form(m);
        benchmark::DoNotOptimize(f.diagonal);
    }
}
BENCHMARK(BM_SmithDenseRandomWithTransforms)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
