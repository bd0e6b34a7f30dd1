#include "shockscope/entire_solution.hpp"

#include "shockscope/error.hpp"
#include "shockscope/parallel.hpp"
#include "shockscope/special_functions.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace shockscope {

namespace {

namespace bmc = boost::math::constants;

// log |sinh(y)|, finite for large |y|.
double log_abs_sinh(double y) {
    const double a = std::fabs(y);
    if (a > 20.0) return a - bmc::ln_two<double>() + std::log1p(-std::exp(-2.0 * a));
    return std::log(std::sinh(a));
}

double log1p_exp(double v) { return v > 0 ? v + std::log1p(std::exp(-v)) : std::log1p(std::exp(v)); }

} // namespace

EntireSolution::EntireSolution(const Measure& mu, QuadratureConfig config)
    : mu_(normalize(mu)), support_(shockscope::support(mu_)), config_(config) {}

LogReal EntireSolution::U(double t, double x) const {
    return gaussian_moments(mu_, 0.25 * t, -0.5 * x, 0.0, 0, config_)[0];
}

double EntireSolution::u(double t, double x) const {
    // Centre the first moment inside the support so the ratio stays well
    // conditioned; u = centre + <z - centre>.
    const double centre = 0.5 * (support_.alpha + support_.beta);
    const auto m = gaussian_moments(mu_, 0.25 * t, -0.5 * x, centre, 1, config_);
    const double v = centre + ratio(m[1], m[0]);
    return std::clamp(v, support_.alpha, support_.beta);
}

double EntireSolution::dx_u(double t, double x) const {
    const double mean = u(t, x);
    const auto m = gaussian_moments(mu_, 0.25 * t, -0.5 * x, mean, 2, config_);
    const double var = ratio(m[2], m[0]);
    return -0.5 * std::max(var, 0.0);
}

LogReal lebesgue_U(double t, double x) {
    if (t == 0.0) {
        if (x == 0.0) return LogReal(2.0);
        return LogReal::from_log(std::log(4.0 / std::fabs(x)) + log_abs_sinh(0.5 * x));
    }
    if (t < 0.0) {
        // (2/sqrt|t|) e^{-x^2/4t} (E(p) + E(q)), E(p) + E(q) = (sqrt(pi)/2)(erfc(-q) - erfc(p)).
        const double s = std::sqrt(-t);
        const double p = 0.5 * s + x / (2.0 * s), q = 0.5 * s - x / (2.0 * s);
        const LogReal d = erfc_difference(-q, p);
        return LogReal::from_log(std::log(2.0 / s) - x * x / (4.0 * t) + std::log(0.5 * bmc::root_pi<double>()) +
                                 d.log_abs());
    }
    // (2/sqrt t) e^{t/4} (e^{x/2} D(p) + e^{-x/2} D(q)).
    const double s = std::sqrt(t);
    const double p = 0.5 * s + x / (2.0 * s), q = 0.5 * s - x / (2.0 * s);
    const LogReal terms[2] = {LogReal(dawson(p)) * LogReal::from_log(0.5 * x),
                              LogReal(dawson(q)) * LogReal::from_log(-0.5 * x)};
    const LogReal bracket = log_sum(terms);
    return LogReal::from_log(std::log(2.0 / s) + 0.25 * t) * bracket;
}

namespace {

// (4/t) e^{t/4} sinh(x/2), as a signed log-magnitude.
LogReal lebesgue_flux_term(double t, double x) {
    if (x == 0.0) return {};
    return LogReal::from_log(std::log(4.0 / std::fabs(t)) + 0.25 * t + log_abs_sinh(0.5 * x),
                             (t > 0) == (x > 0) ? 1 : -1);
}

} // namespace

double closed_lebesgue_u(double t, double x) {
    if (t == 0.0) {
        // 2/x - coth(x/2)
        if (std::fabs(x) < 1e-3) return -x / 6.0 + x * x * x / 360.0;
        return 2.0 / x - 1.0 / std::tanh(0.5 * x);
    }
    return x / t - ratio(lebesgue_flux_term(t, x), lebesgue_U(t, x));
}

double closed_lebesgue_atom0_u(double t, double x) {
    if (t == 0.0) throw InputError("closed form for Lebesgue plus atom needs t != 0");
    const LogReal U = lebesgue_U(t, x);
    const double log_one_plus_U = log1p_exp(U.log_abs());
    const double frac = std::exp(U.log_abs() - log_one_plus_U);
    const LogReal T = lebesgue_flux_term(t, x);
    const double second = T.is_zero() ? 0.0 : T.sign() * std::exp(T.log_abs() - log_one_plus_U);
    return (x / t) * frac - second;
}

double psi_gamma(double gamma, double x) {
    if (gamma < 0.0) throw InputError("psi_gamma requires gamma >= 0");
    // sinh x / (gamma + cosh x) = sgn(x) (1 - e^{-2|x|}) / (1 + e^{-2|x|} + 2 gamma e^{-|x|})
    const double a = std::fabs(x);
    const double e2 = std::exp(-2.0 * a);
    const double g = gamma == 0.0 ? 0.0 : 2.0 * std::exp(std::log(gamma) - a);
    const double r = -std::expm1(-2.0 * a) / (1.0 + e2 + g);
    return -2.0 * std::copysign(r, x);
}

double burgmerger_u(double t, double x) {
    const double a = std::fabs(x);
    const double e2 = std::exp(-2.0 * a);
    const double g = 2.0 * std::exp(-t - a);
    const double r = -std::expm1(-2.0 * a) / (1.0 + e2 + g);
    return -2.0 * std::copysign(r, x);
}

double burgers_shock(double alpha, double beta, double y) {
    const double c = 0.5 * (alpha + beta), delta = 0.5 * (beta - alpha);
    return c - delta * std::tanh(0.5 * delta * y);
}

double cole_hopf(const LogReal& U, const LogReal& U_x) { return -2.0 * ratio(U_x, U); }

LogReal appell_V(const EntireSolution& sol, double tau, double xi) {
    if (!(tau > 0.0)) throw InputError("Appell transform needs tau > 0");
    return log_heat_kernel(tau, xi) * sol.U(-1.0 / tau, -xi / tau);
}

double appell_residual(const EntireSolution& sol, double t, double x, double h) {
    if (!(t < 0.0)) throw InputError("appell_residual needs t < 0");
    const double tau = -1.0 / t, xi = x / t;
    if (!(tau > 2.0 * h)) throw InputError("finite-difference step too large for tau");
    const LogReal base = appell_V(sol, tau, xi);
    auto r = [&](double ta, double xa) { return ratio(appell_V(sol, ta, xa), base); };
    const double v_t = (-r(tau + 2 * h, xi) + 8 * r(tau + h, xi) - 8 * r(tau - h, xi) + r(tau - 2 * h, xi)) / (12 * h);
    const double v_xx =
        (-r(tau, xi + 2 * h) + 16 * r(tau, xi + h) - 30.0 + 16 * r(tau, xi - h) - r(tau, xi - 2 * h)) / (12 * h * h);
    return std::fabs(v_t - v_xx);
}

LogReal poisson_eval(const Measure& mu, double t, double x, const QuadratureConfig& config) {
    if (!(t > 0.0)) throw InputError("poisson_eval needs t > 0");
    // K(t, x - z) = K(t, x) exp(-z^2/4t + x z/2t)
    const LogReal I = gaussian_moments(mu, -0.25 / t, 0.5 * x / t, 0.0, 0, config)[0];
    return log_heat_kernel(t, x) * I;
}

std::vector<TxSample> evaluate_grid(const std::function<double(double, double)>& field, const TxGridSpec& spec) {
    if (spec.nt < 1 || spec.nx < 1) throw InputError("grid sizes must be positive");
    std::vector<TxSample> out(static_cast<std::size_t>(spec.nt) * spec.nx);
    parallel_for(spec.nt, [&](std::size_t i) {
        const double t = spec.t(static_cast<int>(i));
        for (int j = 0; j < spec.nx; ++j) {
            const double x = spec.x(j);
            out[i * spec.nx + j] = {t, x, field(t, x)};
        }
    });
    return out;
}

double level_crossing(const std::function<double(double)>& field, double level, double lo, double hi) {
    auto g = [&](double x) { return field(x) - level; };
    const double glo = g(lo), ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo > 0) == (ghi > 0)) throw NumericalError("level is not bracketed");
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(g, lo, hi, glo, ghi,
                                                     boost::math::tools::eps_tolerance<double>(50), iters);
    return 0.5 * (r.first + r.second);
}

} // namespace shockscope
