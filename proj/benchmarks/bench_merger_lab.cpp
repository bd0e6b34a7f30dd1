#include "shockscope/merger_lab.hpp"

#include <benchmark/benchmark.h>

namespace ss = shockscope;

static void BM_VmEval(benchmark::State& state) {
    double x = -20.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ss::vm_eval(10.0, 7.0, x));
        x = x > 20.0 ? -20.0 : x + 0.1;
    }
}
BENCHMARK(BM_VmEval);

static void BM_MergerU(benchmark::State& state) {
    const ss::MergerSolution sol(ss::MergerSchedule(10.0, {1.0, 200.0, 1e9}));
    double x = -20.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sol.u(209.0, x));
        x = x > 20.0 ? -20.0 : x + 0.1;
    }
}
BENCHMARK(BM_MergerU);

static void BM_RepairDiag(benchmark::State& state) {
    const ss::MergerSolution sol(ss::MergerSchedule(10.0, {1.0, 200.0, 1e9}));
    for (auto _ : state) benchmark::DoNotOptimize(ss::repair_diag(sol, 2, 1.0).sup_error);
}
BENCHMARK(BM_RepairDiag);
