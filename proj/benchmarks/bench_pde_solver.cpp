#include "shockscope/pde_solver.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace ss = shockscope;

static void BM_BurgersStep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto flux = ss::Flux::burgers();
    const auto u0 = ss::Grid::sample(-20.0, 20.0, n, [](double x) { return -std::tanh(x); });
    ss::SolverConfig cfg;
    for (auto _ : state) {
        const auto out = ss::run_scl(flux, u0, 1.0, cfg);
        benchmark::DoNotOptimize(out.back().values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BurgersStep)->Arg(201)->Arg(401)->Arg(801)->Unit(benchmark::kMillisecond);

static void BM_QuarticFlux(benchmark::State& state) {
    const auto flux = ss::Flux::polynomial({0.0, -1.0, 0.0, 0.0, 1.0});
    const auto u0 = ss::Grid::sample(-20.0, 20.0, 401, [](double x) { return x < 0.0 ? 1.0 : -0.5; });
    ss::SolverConfig cfg;
    for (auto _ : state) {
        const auto out = ss::run_scl(flux, u0, 1.0, cfg);
        benchmark::DoNotOptimize(out.back().values.data());
    }
}
BENCHMARK(BM_QuarticFlux)->Unit(benchmark::kMillisecond);
