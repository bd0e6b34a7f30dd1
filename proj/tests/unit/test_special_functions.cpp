#include "oracles/oracles.hpp"
#include "shockscope/special_functions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace ss = shockscope;

TEST(Erfc, BasicValues) {
    EXPECT_DOUBLE_EQ(ss::erfc(0.0), 1.0);
    for (double x : {-3.0, -0.5, 0.2, 1.0, 4.0, 20.0}) EXPECT_NEAR(ss::erfc(x) / std::erfc(x), 1.0, 1e-14) << x;
}

TEST(Erfc, BelowGaussianForPositiveArguments) {
    for (double z : {0.5, 1.0, 2.0, 5.0}) EXPECT_LE(ss::erfc(z), std::exp(-z * z));
}

TEST(LogErfc, FarTailAgainstAsymptoticSeries) {
    // log erfc(x) = -x^2 - log(x sqrt(pi)) + log(1 - 1/(2x^2) + 3/(4x^4) - ...)
    const double x = 1e5;
    const double series = -x * x - std::log(x * std::sqrt(std::numbers::pi)) + std::log1p(-0.5 / (x * x));
    // |log erfc| ~ 1e10, where doubles are spaced ~2e-6 apart
    EXPECT_NEAR(ss::log_erfc(x).log_abs(), series, 1e-5);
    EXPECT_EQ(ss::log_erfc(x).sign(), 1);
}

TEST(LogErfc, ContinuousAcrossTheSwitch) {
    for (double x : {24.9, 25.0, 25.1, 30.0})
        EXPECT_NEAR(ss::log_erfc(x).log_abs(), static_cast<double>(std::log(std::erfc(static_cast<long double>(x)))),
                    1e-12)
            << x;
}

TEST(ErfcDifference, MatchesDirectDifferenceAndTails) {
    EXPECT_NEAR(ss::erfc_difference(-1.0, 2.0).to_double(), std::erfc(-1.0) - std::erfc(2.0), 1e-15);
    // deep tail, where the direct difference underflows
    const double a = 40.0, b = 40.5;
    const double expect = -a * a - std::log(a * std::sqrt(std::numbers::pi)) + std::log1p(-0.5 / (a * a) + 0.75 / std::pow(a, 4));
    EXPECT_NEAR(ss::erfc_difference(a, b).log_abs(), expect, 1e-6);
    // close arguments
    const double h = 1e-9;
    EXPECT_NEAR(ss::erfc_difference(0.3, 0.3 + h).to_double() / h, 2.0 / std::sqrt(std::numbers::pi) * std::exp(-0.09),
                1e-6);
    EXPECT_TRUE(ss::erfc_difference(1.0, 1.0).is_zero());
}

TEST(ErrE, ZeroOddAndOracle) {
    EXPECT_DOUBLE_EQ(ss::err_E(0.0), 0.0);
    EXPECT_DOUBLE_EQ(ss::err_E(-1.3), -ss::err_E(1.3));
    const double ref = static_cast<double>(oracle::err_E(1.0L));
    EXPECT_NEAR(ss::err_E(1.0), ref, 1e-14);
    EXPECT_NEAR(ss::err_E(1.0), 0.746824132812427, 1e-14);  // frozen
}

TEST(Dawson, SmallAndLargeArguments) {
    EXPECT_DOUBLE_EQ(ss::dawson(0.0), 0.0);
    const double s = 0.01;
    EXPECT_NEAR(ss::dawson(s), s - 2.0 * s * s * s / 3.0, 1e-9);
    // D(x) = 1/(2x) + 1/(4x^3) + 3/(8x^5) + O(x^-7)
    EXPECT_NEAR(ss::dawson(50.0), 1.0 / 100.0 + 1.0 / (4.0 * std::pow(50.0, 3)) + 3.0 / (8.0 * std::pow(50.0, 5)), 1e-11);
    EXPECT_DOUBLE_EQ(ss::dawson(-2.0), -ss::dawson(2.0));
}

TEST(Dawson, AgainstQuadratureOracle) {
    for (double x : {0.3, 0.92413887, 2.5, 6.0})
        EXPECT_NEAR(ss::dawson(x), static_cast<double>(oracle::dawson(x)), 1e-14) << x;
    EXPECT_NEAR(ss::dawson(0.92413887300459), 0.541044224635181, 1e-13);  // maximum of D, frozen
}

TEST(HeatKernel, Values) {
    EXPECT_NEAR(ss::heat_kernel(0.25, 0.0), 1.0 / std::sqrt(std::numbers::pi), 1e-15);
    EXPECT_NEAR(ss::heat_kernel(1.0, 2.0), std::exp(-1.0) / std::sqrt(4.0 * std::numbers::pi), 1e-16);
    EXPECT_NEAR(ss::log_heat_kernel(2.0, 300.0).log_abs(), -300.0 * 300.0 / 8.0 - 0.5 * std::log(8.0 * std::numbers::pi),
                1e-9);
}

TEST(HeatKernel, UnitMass) {
    const auto mass = oracle::integrate([](long double x) { return ss::heat_kernel(0.7, static_cast<double>(x)); },
                                        -40.0L, 40.0L);
    EXPECT_NEAR(static_cast<double>(mass), 1.0, 1e-10);
}
