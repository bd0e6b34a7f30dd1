#include "oracles/oracles.hpp"
#include "shockscope/entire_solution.hpp"
#include "shockscope/special_functions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <utility>

namespace ss = shockscope;
using ss::EntireSolution;
using ss::Measure;

namespace {

Measure lebesgue() { return Measure::uniform(-1.0, 1.0); }
Measure merger_measure() { return Measure({{-2.0, 0.25}, {0.0, 0.5}, {2.0, 0.25}}, {}); }

} // namespace

TEST(EvalU, LebesgueAtTimeZero) {
    EXPECT_NEAR(ss::lebesgue_U(0.0, 2.0).to_double(), 2.0 * std::sinh(1.0), 1e-14);
    // normalised measure: half the non-normalised value
    EXPECT_NEAR(EntireSolution(lebesgue()).U(0.0, 2.0).to_double(), std::sinh(1.0), 1e-14);
}

TEST(EvalU, DiracAtZeroIsOne) {
    const EntireSolution s(Measure::dirac(0.0));
    for (double t : {-5.0, 0.0, 3.0}) EXPECT_DOUBLE_EQ(s.U(t, 1.7).to_double(), 1.0);
}

TEST(EvalU, LebesgueClosedFormAgainstQuadrature) {
    for (auto [t, x] : {std::pair{-4.0, 1.0}, {-30.0, 7.0}, {2.0, -1.0}, {9.0, 3.0}}) {
        const auto ref = oracle::integrate([=](long double z) { return std::exp(-z * x / 2 + z * z * t / 4); }, -1.0L, 1.0L);
        EXPECT_NEAR(ss::lebesgue_U(t, x).to_double() / static_cast<double>(ref), 1.0, 1e-13) << t << " " << x;
        EXPECT_NEAR(EntireSolution(lebesgue()).U(t, x).to_double() * 2.0 / static_cast<double>(ref), 1.0, 1e-12);
    }
}

TEST(EvalU, ClosedFormShocks) {
    const EntireSolution pair(Measure({{-2.0, 0.5}, {2.0, 0.5}}, {}));
    EXPECT_NEAR(pair.u(3.0, 1.0), -2.0 * std::tanh(1.0), 1e-14);
    EXPECT_NEAR(EntireSolution(merger_measure()).u(0.0, 2.0), -2.0 * std::sinh(2.0) / (1.0 + std::cosh(2.0)), 1e-14);
    const EntireSolution atom(Measure::dirac(1.5));
    for (double x : {-10.0, 0.0, 4.0}) EXPECT_DOUBLE_EQ(atom.u(-2.0, x), 1.5);
}

TEST(EvalU, StaysInsideTheSupportFarOut) {
    const EntireSolution s(lebesgue());
    for (double t : {-1e6, -100.0, 100.0}) {
        for (double x : {-1e5, -50.0, 50.0, 1e5}) {
            const double u = s.u(t, x);
            EXPECT_GE(u, -1.0);
            EXPECT_LE(u, 1.0);
            EXPECT_TRUE(std::isfinite(u));
        }
    }
}

TEST(EvalU, GeneralMeasureAgainstOracle) {
    // two pieces with polynomial and exponential weights plus atoms
    const Measure mu({{-1.5, 0.2}, {0.25, 0.1}},
                     {ss::DensityPiece{-1.0, 0.0, {1.0, 0.5}, 0.3, 0.0},
                      ss::DensityPiece{0.5, 2.0, {0.2, 0.0, 0.4}, -0.5, -0.2}});
    const std::vector<oracle::Atom> atoms{{-1.5L, 0.2L}, {0.25L, 0.1L}};
    const std::vector<oracle::Density> pieces{
        {-1.0L, 0.0L, [](long double z) { return (1.0L + 0.5L * z) * std::exp(0.3L * z); }},
        {0.5L, 2.0L, [](long double z) { return (0.2L + 0.4L * z * z) * std::exp(-0.5L * z - 0.2L * z * z); }}};
    const EntireSolution s(mu);
    for (double t : {-40.0, -3.0, 0.0, 1.0, 6.0})
        for (double x : {-20.0, -2.0, 0.0, 1.3, 15.0})
            EXPECT_NEAR(s.u(t, x), static_cast<double>(oracle::entire_u(atoms, pieces, t, x)), 1e-10) << t << " " << x;
}

TEST(EvalDxU, Values) {
    const EntireSolution atom(Measure::dirac(2.0));
    EXPECT_EQ(atom.dx_u(1.0, 3.0), 0.0);
    const EntireSolution pair(Measure({{-2.0, 0.5}, {2.0, 0.5}}, {}));
    EXPECT_NEAR(pair.dx_u(0.0, 0.0), -2.0, 1e-14);
}

TEST(EvalDxU, MatchesFiniteDifferences) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> z(-3.0, 3.0), w(0.1, 2.0);
    for (int trial = 0; trial < 5; ++trial) {
        const EntireSolution s(Measure({{z(rng), w(rng)}, {z(rng), w(rng)}, {z(rng), w(rng)}}, {}));
        const double h = 1e-5, t = -1.0, x = 0.3;
        EXPECT_NEAR(s.dx_u(t, x), (s.u(t, x + h) - s.u(t, x - h)) / (2 * h), 1e-6);
    }
}

TEST(ClosedLebesgue, OddAndLargeTimeLimit) {
    for (double t : {-7.0, 0.5, 30.0}) EXPECT_NEAR(ss::closed_lebesgue_u(t, 0.0), 0.0, 1e-15);
    // O(1/t) approach to -tanh(x/2)
    EXPECT_NEAR(ss::closed_lebesgue_u(40.0, 1.0), -std::tanh(0.5), 2.0 / 40.0);
    EXPECT_LT(std::fabs(ss::closed_lebesgue_u(400.0, 1.0) + std::tanh(0.5)),
              std::fabs(ss::closed_lebesgue_u(40.0, 1.0) + std::tanh(0.5)));
}

TEST(ClosedLebesgue, AgainstQuadrature) {
    const EntireSolution s(lebesgue());
    EXPECT_NEAR(ss::closed_lebesgue_u(-9.0, 2.0), s.u(-9.0, 2.0), 1e-8);
    for (double t : {-9.0, -1.0, 1.0, 9.0})
        for (double x : {-10.0, -3.5, 0.5, 8.0}) EXPECT_NEAR(ss::closed_lebesgue_u(t, x), s.u(t, x), 1e-8);
}

TEST(ClosedLebesgueAtom, OddAndQuadrature) {
    EXPECT_NEAR(ss::closed_lebesgue_atom0_u(-3.0, 0.0), 0.0, 1e-15);
    const EntireSolution s(Measure::dirac(0.0) + lebesgue());
    EXPECT_NEAR(ss::closed_lebesgue_atom0_u(-9.0, 2.0), s.u(-9.0, 2.0), 1e-8);
    EXPECT_NEAR(ss::closed_lebesgue_atom0_u(5.0, -1.0), s.u(5.0, -1.0), 1e-8);
    // the atom pins sqrt|t| u(t, 3 sqrt|t|) to zero, at rate |t|^{-1/2}; frozen from a 40-digit quadrature
    const std::pair<double, double> frozen[] = {{-1e4, -0.755048018764687}, {-1e6, -0.097616300065561},
                                                {-1e8, -0.0100561224464239}};
    for (auto [t, want] : frozen)
        EXPECT_NEAR(std::sqrt(-t) * ss::closed_lebesgue_atom0_u(t, 3.0 * std::sqrt(-t)), want, 1e-9 * std::fabs(want)) << t;
}

TEST(PsiGamma, Values) {
    EXPECT_EQ(ss::psi_gamma(1.0, 0.0), 0.0);
    EXPECT_NEAR(ss::psi_gamma(1.0, 2.0), -2.0 * std::sinh(2.0) / (1.0 + std::cosh(2.0)), 1e-15);
    const double g = 0.37;
    const EntireSolution s(merger_measure());
    for (double x : {-3.0, -0.4, 1.0, 6.0}) EXPECT_NEAR(ss::psi_gamma(g, x), s.u(std::log(1.0 / g), x), 1e-12);
    EXPECT_NEAR(ss::psi_gamma(0.5, 800.0), -2.0, 1e-15);
}

TEST(BurgersShock, MatchesPair) {
    EXPECT_NEAR(ss::burgers_shock(-2.0, 2.0, 1.0), -2.0 * std::tanh(1.0), 1e-15);
    EXPECT_NEAR(ss::burgers_shock(-1.0, 3.0, 0.0), 1.0, 1e-15);
}

TEST(ColeHopf, Values) {
    EXPECT_EQ(ss::cole_hopf(ss::LogReal(1.0), ss::LogReal(0.0)), 0.0);
    const double U = std::exp(1.0) * std::cosh(1.0), Ux = std::exp(1.0) * std::sinh(1.0);
    EXPECT_NEAR(ss::cole_hopf(ss::LogReal(U), ss::LogReal(Ux)), -2.0 * std::tanh(1.0), 1e-15);
}

TEST(Appell, ResidualIsSmall) {
    const EntireSolution s(lebesgue());
    EXPECT_LE(ss::appell_residual(s, -2.0, 0.5, 1e-3), 1e-5);
}

TEST(Poisson, Values) {
    const double t = 0.5;
    EXPECT_NEAR(ss::poisson_eval(Measure::dirac(0.0), t, 0.3).to_double(), ss::heat_kernel(t, 0.3), 1e-16);
    EXPECT_NEAR(ss::poisson_eval(Measure::uniform(-50.0, 50.0), 1.0, 0.0).to_double(), 1.0, 1e-12);
    const Measure two({{-1.0, 0.5}, {1.0, 0.5}}, {});
    EXPECT_NEAR(ss::poisson_eval(two, t, 0.2).to_double(),
                0.5 * ss::heat_kernel(t, 1.2) + 0.5 * ss::heat_kernel(t, -0.8), 1e-15);
}

TEST(EvaluateGrid, RowMajorOrder) {
    ss::TxGridSpec spec{0.0, 1.0, -1.0, 1.0, 3, 5};
    const auto samples = ss::evaluate_grid([](double t, double x) { return 10 * t + x; }, spec);
    ASSERT_EQ(samples.size(), 15u);
    EXPECT_EQ(samples[0].t, 0.0);
    EXPECT_EQ(samples[4].x, 1.0);
    EXPECT_EQ(samples[5].t, 0.5);
    EXPECT_DOUBLE_EQ(samples[14].u, 11.0);
}

TEST(LevelCrossing, FindsLogShift) {
    const EntireSolution s(Measure::dirac(1.0) + lebesgue());
    const double t = 100.0;
    const double xbar = ss::level_crossing([&](double x) { return s.u(t, x); }, 0.0, -10.0, t / 2);
    EXPECT_NEAR(xbar, std::log(1.0 + t / 2.0), 0.1);
}
