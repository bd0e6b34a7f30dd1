#include "shockscope/entire_solution.hpp"
#include "shockscope/special_functions.hpp"

#include <benchmark/benchmark.h>

namespace ss = shockscope;

static void BM_Erfc(benchmark::State& state) {
    double x = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ss::erfc(x));
        x = x > 6.0 ? -3.0 : x + 0.01;
    }
}
BENCHMARK(BM_Erfc);

static void BM_LogErfcTail(benchmark::State& state) {
    double x = 30.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ss::log_erfc(x));
        x = x > 1e4 ? 30.0 : x * 1.01;
    }
}
BENCHMARK(BM_LogErfcTail);

static void BM_EvalAtoms(benchmark::State& state) {
    const ss::Measure mu({{-2.0, 0.25}, {0.0, 0.5}, {2.0, 0.25}}, {});
    const ss::EntireSolution sol(mu);
    double x = -10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sol.u(-3.0, x));
        x = x > 10.0 ? -10.0 : x + 0.05;
    }
}
BENCHMARK(BM_EvalAtoms);

static void BM_EvalDensity(benchmark::State& state) {
    const ss::EntireSolution sol(ss::Measure::uniform(-1.0, 1.0));
    double x = -10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sol.u(-3.0, x));
        x = x > 10.0 ? -10.0 : x + 0.05;
    }
}
BENCHMARK(BM_EvalDensity);

static void BM_ClosedLebesgue(benchmark::State& state) {
    double x = -10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ss::closed_lebesgue_u(-3.0, x));
        x = x > 10.0 ? -10.0 : x + 0.05;
    }
}
BENCHMARK(BM_ClosedLebesgue);

BENCHMARK_MAIN();
