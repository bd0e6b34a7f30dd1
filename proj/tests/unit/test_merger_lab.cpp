#include "oracles/oracles.hpp"
#include "shockscope/entire_solution.hpp"
#include "shockscope/error.hpp"
#include "shockscope/merger_lab.hpp"
#include "shockscope/pde_solver.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace ss = shockscope;
using ss::MergerSchedule;
using ss::MergerSolution;

TEST(Vm, InitialDataAndSymmetry) {
    EXPECT_DOUBLE_EQ(ss::vm_eval(5.0, 0.0, 0.0).to_double(), 1.0);
    EXPECT_NEAR(ss::vm_eval(5.0, 0.0, 7.0).to_double(), std::cosh(5.0), 1e-10);
    EXPECT_DOUBLE_EQ(ss::vm_eval(3.0, 2.0, 1.7).log_abs(), ss::vm_eval(3.0, 2.0, -1.7).log_abs());
    EXPECT_THROW(ss::vm_eval(0.0, 1.0, 0.0), ss::InputError);
    EXPECT_THROW(ss::vm_eval(1.0, -1.0, 0.0), ss::InputError);
}

TEST(Vm, AgainstHeatConvolution) {
    EXPECT_NEAR(ss::vm_eval(2.0, 1.0, 0.0).to_double(), static_cast<double>(oracle::vm(2.0L, 1.0L, 0.0L)), 1e-10);
    EXPECT_NEAR(ss::vm_eval(2.0, 1.0, 0.3).to_double(), 1.97138699316232, 1e-12);  // frozen
    for (auto [m, t, x] : {std::tuple{2.0, 1.0, 0.3}, {3.0, 2.0, 1.7}, {10.0, 30.0, -4.0}, {40.0, 5.0, 2.0},
                           {6.0, 0.05, 5.9}}) {
        const double v = static_cast<double>(oracle::vm(m, t, x));
        const double dv = static_cast<double>(oracle::vm_dx(m, t, x));
        EXPECT_NEAR(ss::vm_eval(m, t, x).to_double() / v, 1.0, 1e-12) << m << " " << t << " " << x;
        EXPECT_NEAR(ss::vm_dx_eval(m, t, x).to_double() / dv, 1.0, 1e-11) << m << " " << t << " " << x;
    }
}

TEST(Vm, HugeParametersStayFinite) {
    const auto v = ss::vm_eval(1e10, 1e10, 1.0);
    EXPECT_TRUE(std::isfinite(v.log_abs()));
    EXPECT_GT(v.log_abs(), 7e9);
    const double r = ss::ratio(ss::vm_dx_eval(1e10, 1e10, 1.0), v);
    EXPECT_NEAR(r, 0.5 * std::tanh(0.5), 1e-5);
}

TEST(Vm, DeficitsMatchDirectDifferences) {
    const double m = 3.0, t = 0.7, x = 0.4;
    const double V = ss::vm_eval(m, t, x).to_double();
    EXPECT_NEAR(ss::vm_deficit_far(m, t, x).to_double(), std::cosh(m) - V, 1e-12);
    EXPECT_NEAR(ss::vm_deficit_near(m, t, x).to_double(), std::exp(t) * std::cosh(x) - V, 1e-12);
    EXPECT_NEAR(ss::vm_deficit_near_dx(m, t, x).to_double(),
                std::exp(t) * std::sinh(x) - ss::vm_dx_eval(m, t, x).to_double(), 1e-12);
}

TEST(LongBounds, Examples) {
    EXPECT_TRUE(ss::check_long_bounds(2.0, 100.0, 0.0).all());
    EXPECT_TRUE(ss::check_long_bounds(2.0, 2.0, 0.5).lower_ok);
    EXPECT_TRUE(ss::check_long_bounds(10.0, 1e4, 5.0).all());
}

TEST(ShortBounds, Examples) {
    EXPECT_TRUE(ss::check_short_bounds(40.0, 5.0, 2.0).all());
    EXPECT_TRUE(ss::check_short_bounds(1000.0, 100.0, 50.0).all());
    EXPECT_NEAR(ss::vm_eval(40.0, 1e-8, 1.3).to_double(), std::cosh(1.3), 1e-7);
    EXPECT_THROW(ss::check_short_bounds(10.0, 3.0, 0.0), ss::InputError);
}

TEST(VmBounds, RandomAdmissibleSamples) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double m = 1.0 + 60.0 * u(rng), t = std::pow(10.0, -2.0 + 6.0 * u(rng)), x = (2 * u(rng) - 1) * 3 * m;
        EXPECT_TRUE(ss::check_long_bounds(m, t, x).all()) << m << " " << t << " " << x;
        const double ms = 8.0 + 500.0 * u(rng), ts = 0.2 * ms * u(rng) + 1e-3;
        const double xs = (2 * u(rng) - 1) * (0.5 * ms - 2.0 * ts);
        EXPECT_TRUE(ss::check_short_bounds(ms, ts, xs).all()) << ms << " " << ts << " " << xs;
    }
}

TEST(InterAsymptotic, Values) {
    const double m = 1e4;
    const auto v = ss::vm_eval(m, m / 1.0, 0.0);
    EXPECT_LE(std::fabs(ss::ratio(v, ss::inter_asymptotic(m, 1.0, 0.0)) - 1.0), 10.0 / m);
    const double shape = ss::ratio(ss::vm_eval(m, m, 2.0), v);
    EXPECT_NEAR(shape, std::cosh(1.0), 1e-3);
    const double big = 1e6;
    EXPECT_LE(std::fabs(ss::ratio(ss::vm_eval(big, big / 0.5, 0.0), ss::inter_asymptotic(big, 0.5, 0.0)) - 1.0),
              100.0 / big);
    EXPECT_THROW(ss::inter_asymptotic(m, 2.0, 0.0), ss::InputError);
}

TEST(Schedule, Validation) {
    EXPECT_NO_THROW(MergerSchedule::standard());
    EXPECT_THROW(MergerSchedule(9.0, {1.0, 100.0}), ss::InputError);
    EXPECT_THROW(MergerSchedule(10.0, {1.0, 99.0}), ss::InputError);
    EXPECT_THROW(MergerSchedule(10.0, {0.5, 100.0}), ss::InputError);
    EXPECT_THROW(MergerSchedule(10.0, {1.0}), ss::InputError);
    const auto s = MergerSchedule::standard();
    EXPECT_EQ(s.merge_time(2), 209.0);
    EXPECT_EQ(s.merge_time(3), 1e9 + 1800.0);
    EXPECT_EQ(s.repair_time(3, 0.5), 2e10);
    EXPECT_THROW(s.merge_time(1), ss::InputError);
    EXPECT_THROW(s.t(4), ss::InputError);
}

TEST(MergerU, OddBoundedAndMonotoneInTerms) {
    const MergerSolution sol(MergerSchedule::standard());
    for (double t : {0.0, 3.0, 209.0, 5000.0, 1e9}) {
        EXPECT_EQ(sol.u(t, 0.0), 0.0);
        for (double x : {0.3, 2.0, 17.0, 400.0}) {
            EXPECT_NEAR(sol.u(t, -x), -sol.u(t, x), 1e-12);
            EXPECT_LE(std::fabs(sol.u(t, x)), 2.0 + 1e-12);
        }
    }
    const MergerSolution shorter(MergerSchedule(10.0, {1.0, 200.0}));
    for (double x : {0.0, 5.0, 50.0}) EXPECT_GE(sol.U(300.0, x).log_abs(), shorter.U(300.0, x).log_abs());
}

TEST(MergerU, AgainstConvolutionAtFirstMerger) {
    // U = 1 + e^{-1} V_10 + e^{-200} V_2000 + (e^{-1e9} V_1e10, negligible here)
    const MergerSolution sol(MergerSchedule::standard());
    const long double t = 209.0L;
    for (long double x : {0.5L, 2.0L, 6.0L}) {
        const long double U = 1.0L + std::exp(-1.0L) * oracle::vm(10.0L, t, x) + std::exp(-200.0L) * oracle::vm(2000.0L, t, x);
        const long double Ux = std::exp(-1.0L) * oracle::vm_dx(10.0L, t, x) + std::exp(-200.0L) * oracle::vm_dx(2000.0L, t, x);
        EXPECT_NEAR(sol.u(209.0, static_cast<double>(x)), static_cast<double>(-2.0L * Ux / U), 1e-10) << static_cast<double>(x);
    }
    // frozen: u(tau_2, 2) sits near Psi_gamma with gamma ~ 0.3, not Psi_1
    EXPECT_NEAR(sol.u(209.0, 2.0), -1.77253056504726, 1e-10);
}

TEST(Diagnostics, RepairAndGuard) {
    const MergerSolution sol(MergerSchedule::standard());
    EXPECT_LE(ss::repair_diag(sol, 3, 1.0, 5.0).sup_error, 1e-3);
    const auto near2 = ss::repair_diag(sol, 3, 1.99, 5.0);
    EXPECT_TRUE(std::isfinite(near2.sup_error));
    EXPECT_THROW(ss::repair_diag(sol, 3, 2.0), ss::InputError);
    const auto merge = ss::merger_diag(sol, 3, 100.0);
    EXPECT_EQ(merge.time, 1e9 + 1800.0);
    EXPECT_TRUE(std::isfinite(merge.sup_error));
}

TEST(MergerU, MatchesPdeRun) {
    const MergerSolution sol(MergerSchedule::standard());
    // u(0, .) jumps at +-10; start from exact cell averages, -2 [log U] / dx across each cell
    const double h = 0.05;
    const auto u0 = ss::Grid::sample(-60.0, 60.0, 2401, [&](double x) {
        return -2.0 * (sol.U(0.0, x + 0.5 * h).log_abs() - sol.U(0.0, x - 0.5 * h).log_abs()) / h;
    });
    ss::SolverConfig cfg;
    cfg.output_interval = 1.0;
    const auto out = ss::run_scl(ss::Flux::burgers(), u0, 5.0, cfg);
    for (const auto& g : out) {
        if (g.time != 1.0 && g.time != 5.0) continue;
        double err = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (std::fabs(g.x(i)) <= 20.0) err = std::max(err, std::fabs(g.values[i] - sol.u(g.time, g.x(i))));
        EXPECT_LE(err, 5e-3) << g.time;
    }
}
