#include "conic/classify.hpp"
#include "conic/factor.hpp"
#include "conic/invariants.hpp"
#include "conic/parser.hpp"
#include "conic/reduce.hpp"
#include "conic/spectral.hpp"

#include <benchmark/benchmark.h>

using namespace conic;

static void BM_parse(benchmark::State& state) {
    for (auto _ : state) {
        GeneralConic c = parse_conic("5x^2 + 6xy + 5y^2 - 4x + 4y - 4 = 0");
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_parse);

static void BM_invariants(benchmark::State& state) {
    GeneralConic c{5, 3, 5, -2, 2, -4};
    for (auto _ : state) {
        Invariants inv = invariants(c);
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_invariants);

static void BM_eigen2x2(benchmark::State& state) {
    for (auto _ : state) {
        SpectralData s = eigen2x2(5, 3, 5);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_eigen2x2);

static void BM_classify(benchmark::State& state) {
    GeneralConic c{9, -6, 4, 4.5, -3, 2};
    for (auto _ : state) {
        Classification tag = classify(c);
        benchmark::DoNotOptimize(tag);
    }
}
BENCHMARK(BM_classify);

static void BM_reduce(benchmark::State& state) {
    GeneralConic c{5, 3, 5, -2, 2, -4};
    for (auto _ : state) {
        ReductionResult r = reduce(c);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_reduce);

static void BM_factor(benchmark::State& state) {
    GeneralConic c{3, -2, 1, 5, -1, -8};
    for (auto _ : state) {
        LineFactorization f = factor_lines(c);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_factor);

BENCHMARK_MAIN();
