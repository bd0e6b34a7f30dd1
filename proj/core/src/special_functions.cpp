#include "shockscope/special_functions.hpp"

#include "shockscope/error.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_dawson.h>

#include <cmath>

namespace shockscope {

namespace {

namespace bmc = boost::math::constants;

constexpr double kAsymptoticFrom = 25.0;

// log erfc(x) for large positive x:
// erfc(x) = exp(-x^2)/(x sqrt(pi)) * sum_n (-1)^n (2n-1)!!/(2x^2)^n.
double log_erfc_asymptotic(double x) {
    const double inv = 1.0 / (2.0 * x * x);
    double term = 1.0, series = 1.0;
    for (int n = 1; n < 60; ++n) {
        const double next = -term * (2 * n - 1) * inv;
        if (std::fabs(next) >= std::fabs(term) || std::fabs(next) < 1e-18) break;
        term = next;
        series += term;
    }
    return -x * x - std::log(x * bmc::root_pi<double>()) + std::log(series);
}

} // namespace

LogReal log_erfc(double x) {
    if (std::isnan(x)) return LogReal(x);
    if (x > kAsymptoticFrom) return LogReal::from_log(log_erfc_asymptotic(x));
    return LogReal(std::erfc(x));
}

double erfc(double x) { return std::erfc(x); }

LogReal erfc_difference(double a, double b) {
    if (std::isnan(a) || std::isnan(b)) return LogReal(std::nan(""));
    if (a > b) throw InputError("erfc_difference requires a <= b");
    if (a == b) return {};
    if (b <= 0.0) return erfc_difference(-b, -a);
    if (a < 0.0) return LogReal(std::erf(b) + std::erf(-a));

    const LogReal ea = log_erfc(a);
    const LogReal eb = log_erfc(b);
    const double d = eb.log_abs() - ea.log_abs();
    if (d < -0.1) return LogReal::from_log(ea.log_abs() + std::log1p(-std::exp(d)));

    // Nearly equal: integrate exp(-(s^2 - a^2)) on [a, b], which is smooth and
    // slowly varying here.
    const double width = b - a;
    auto f = [a](double y) { return std::exp(-(2.0 * a * y + y * y)); };
    const double integral = boost::math::quadrature::gauss<double, 20>::integrate(f, 0.0, width);
    return LogReal::from_log(-a * a + std::log(2.0 / bmc::root_pi<double>() * integral));
}

double err_E(double x) { return 0.5 * bmc::root_pi<double>() * std::erf(x); }

double dawson(double x) {
    // GSL aborts on domain/underflow errors by default; report them through
    // the status code instead.
    static const bool handler_off = [] {
        gsl_set_error_handler_off();
        return true;
    }();
    (void)handler_off;
    if (std::isnan(x)) return x;
    if (std::fabs(x) > 1e8) return 0.5 / x;
    gsl_sf_result r;
    if (gsl_sf_dawson_e(x, &r) != GSL_SUCCESS) throw NumericalError("dawson evaluation failed");
    return r.val;
}

double heat_kernel(double t, double x) { return log_heat_kernel(t, x).to_double(); }

LogReal log_heat_kernel(double t, double x) {
    if (!(t > 0.0)) throw InputError("heat kernel requires t > 0");
    return LogReal::from_log(-x * x / (4.0 * t) - 0.5 * std::log(4.0 * bmc::pi<double>() * t));
}

} // namespace shockscope
