#include "shockscope/merger_lab.hpp"

#include "shockscope/entire_solution.hpp"
#include "shockscope/error.hpp"
#include "shockscope/special_functions.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace shockscope {

namespace {

namespace bmc = boost::math::constants;

constexpr double kRoundingSlack = 1e-12;

double log_cosh(double y) {
    const double a = std::fabs(y);
    return a + std::log1p(std::exp(-2.0 * a)) - bmc::ln_two<double>();
}

void check_args(double m, double t) {
    if (!(m > 0.0) || !std::isfinite(m)) throw InputError("m must be positive and finite");
    if (!(t >= 0.0) || !std::isfinite(t)) throw InputError("t must be finite and non-negative");
}

// e^{shift} erfc(z)
LogReal scaled_erfc(double shift, double z) { return LogReal::from_log(shift) * log_erfc(z); }

LogReal vhat(double m, double t, double y) {
    return scaled_erfc(log_cosh(m) - bmc::ln_two<double>(), (m + y) / (2.0 * std::sqrt(t)));
}

LogReal what(double m, double t, double y) {
    const double s = 2.0 * std::sqrt(t);
    return LogReal::from_log(t + y - std::log(4.0)) * erfc_difference((2.0 * t - m + y) / s, (2.0 * t + m + y) / s);
}

// The four tail integrals of K(t, x - y) e^{+-y} over y >= m and y <= -m,
// each times 4: e^{t+x} erfc((m-x-2t)/s), e^{t-x} erfc((m-x+2t)/s),
// e^{t+x} erfc((m+x+2t)/s), e^{t-x} erfc((m+x-2t)/s).
std::array<LogReal, 4> tails(double m, double t, double x) {
    const double s = 2.0 * std::sqrt(t);
    return {scaled_erfc(t + x, (m - x - 2.0 * t) / s), scaled_erfc(t - x, (m - x + 2.0 * t) / s),
            scaled_erfc(t + x, (m + x + 2.0 * t) / s), scaled_erfc(t - x, (m + x - 2.0 * t) / s)};
}

} // namespace

LogReal vm_eval(double m, double t, double x) {
    check_args(m, t);
    if (t == 0.0) return LogReal::from_log(log_cosh(std::min(std::fabs(x), m)));
    const LogReal terms[4] = {vhat(m, t, x), vhat(m, t, -x), what(m, t, x), what(m, t, -x)};
    return log_sum(terms);
}

LogReal vm_dx_eval(double m, double t, double x) {
    check_args(m, t);
    if (t == 0.0) return std::fabs(x) < m ? LogReal(std::sinh(x)) : LogReal{};
    // The Gaussian terms from differentiating the V-hat and W-hat erfc's cancel.
    const LogReal terms[2] = {what(m, t, x), -what(m, t, -x)};
    return log_sum(terms);
}

LogReal vm_deficit_far(double m, double t, double x) {
    check_args(m, t);
    if (t == 0.0) {
        const double y = std::min(std::fabs(x), m);
        return LogReal::from_log(log_cosh(m)) - LogReal::from_log(log_cosh(y));
    }
    const double s = 2.0 * std::sqrt(t);
    const double p = (m + x) / s, q = (m - x) / s;
    const LogReal terms[3] = {LogReal::from_log(log_cosh(m) - bmc::ln_two<double>()) * erfc_difference(-q, p),
                              -what(m, t, x), -what(m, t, -x)};
    return log_sum(terms);
}

LogReal vm_deficit_near(double m, double t, double x) {
    check_args(m, t);
    if (t == 0.0) {
        if (std::fabs(x) <= m) return {};
        return LogReal::from_log(log_cosh(x)) - LogReal::from_log(log_cosh(m));
    }
    const double s = 2.0 * std::sqrt(t);
    const auto tl = tails(m, t, x);
    const LogReal quarter = LogReal(0.25);
    const LogReal c = LogReal::from_log(log_cosh(m) - bmc::ln_two<double>());
    const LogReal terms[6] = {quarter * tl[0],
                              quarter * tl[1],
                              quarter * tl[2],
                              quarter * tl[3],
                              -(c * log_erfc((m - x) / s)),
                              -(c * log_erfc((m + x) / s))};
    return log_sum(terms);
}

LogReal vm_deficit_near_dx(double m, double t, double x) {
    check_args(m, t);
    if (t == 0.0) return std::fabs(x) > m ? LogReal(std::sinh(x)) : LogReal{};
    const auto tl = tails(m, t, x);
    const LogReal quarter = LogReal(0.25);
    const LogReal terms[4] = {quarter * tl[0], -(quarter * tl[1]), quarter * tl[2], -(quarter * tl[3])};
    return log_sum(terms);
}

BoundCheck check_long_bounds(double m, double t, double x) {
    check_args(m, t);
    if (!(t > 0.0)) throw InputError("long-time bounds need t > 0");
    BoundCheck r;
    const LogReal W = vm_deficit_far(m, t, x);
    r.upper_ok = W.sign() >= 0;
    r.lower_ok = W.sign() <= 0 ||
                 W.log_abs() <= log_cosh(m) + std::log(m / std::sqrt(bmc::pi<double>() * t)) + kRoundingSlack;
    const LogReal dV = vm_dx_eval(m, t, x);
    r.dx_ok = dV.is_zero() ||
              dV.log_abs() <= std::log(m) + log_cosh(m) - std::log(std::sqrt(4.0 * bmc::pi<double>()) * t) +
                                  kRoundingSlack;
    return r;
}

BoundCheck check_short_bounds(double m, double t, double x) {
    check_args(m, t);
    if (!(t > 0.0)) throw InputError("short-time bounds need t > 0");
    if (std::fabs(x) + 2.0 * t > 0.5 * m) throw InputError("short-time bounds need |x| + 2t <= m/2");
    BoundCheck r;
    const double bound = t + log_cosh(x) - m * m / (16.0 * t) + kRoundingSlack;
    const LogReal W = vm_deficit_near(m, t, x);
    r.upper_ok = W.sign() >= 0;
    r.lower_ok = W.sign() <= 0 || W.log_abs() <= bound;
    const LogReal dW = vm_deficit_near_dx(m, t, x);
    r.dx_ok = dW.is_zero() || dW.log_abs() <= bound;
    return r;
}

LogReal inter_asymptotic(double m, double delta, double x) {
    if (!(m > 0.0)) throw InputError("m must be positive");
    if (!(delta > 0.0 && delta < 2.0)) throw InputError("delta must lie in (0, 2)");
    return LogReal::from_log(-0.5 * std::log(bmc::pi<double>() * m * delta) + std::log(2.0 / (2.0 - delta)) +
                             m * (1.0 - 0.25 * delta) + log_cosh(0.5 * delta * x));
}

MergerSchedule::MergerSchedule(double N, std::vector<double> times) : N_(N), times_(std::move(times)) {
    if (!(N >= 10.0) || !std::isfinite(N)) throw InputError("schedule needs N >= 10");
    if (times_.size() < 2) throw InputError("schedule needs at least two times");
    if (!(times_.front() >= 1.0)) throw InputError("schedule needs t_1 >= 1");
    for (std::size_t j = 0; j + 1 < times_.size(); ++j) {
        const double need = N * N * times_[j] * times_[j];
        if (!std::isfinite(times_[j + 1]) || !(times_[j + 1] >= need))
            throw InputError("schedule violates t_{j+1} >= N^2 t_j^2 at j = " + std::to_string(j + 1));
    }
}

MergerSchedule MergerSchedule::standard() { return MergerSchedule(10.0, {1.0, 200.0, 1e9}); }

double MergerSchedule::t(int k) const {
    if (k < 1 || k > size()) throw InputError("schedule index out of range");
    return times_[static_cast<std::size_t>(k - 1)];
}

double MergerSchedule::merge_time(int k) const {
    if (k < 2) throw InputError("merger times start at k = 2");
    return t(k) + (N_ - 1.0) * t(k - 1);
}

double MergerSchedule::repair_time(int k, double delta) const {
    if (!(delta > 0.0 && delta < 2.0)) throw InputError("delta must lie in (0, 2)");
    return N_ * t(k) / delta;
}

MergerSolution::MergerSolution(MergerSchedule schedule) : schedule_(std::move(schedule)) {}

LogReal MergerSolution::U(double t, double x) const {
    if (!(t >= 0.0)) throw InputError("merger solution is defined for t >= 0");
    std::vector<LogReal> terms{LogReal(1.0)};
    for (double tj : schedule_.times())
        terms.push_back(LogReal::from_log(-tj) * vm_eval(schedule_.N() * tj, t, x));
    return log_sum(terms);
}

LogReal MergerSolution::U_x(double t, double x) const {
    if (!(t >= 0.0)) throw InputError("merger solution is defined for t >= 0");
    std::vector<LogReal> terms;
    for (double tj : schedule_.times())
        terms.push_back(LogReal::from_log(-tj) * vm_dx_eval(schedule_.N() * tj, t, x));
    return log_sum(terms);
}

double MergerSolution::u(double t, double x) const { return cole_hopf(U(t, x), U_x(t, x)); }

namespace {

template <class Target>
MergerDiagnostic sup_over_window(const MergerSolution& sol, double time, double window, int points, Target target) {
    if (points < 2) throw InputError("need at least two window points");
    if (!(window > 0.0)) throw InputError("window must be positive");
    MergerDiagnostic d{time, 0.0, window};
    for (int i = 0; i < points; ++i) {
        const double x = -window + 2.0 * window * i / (points - 1);
        d.sup_error = std::max(d.sup_error, std::fabs(sol.u(time, x) - target(x)));
    }
    return d;
}

} // namespace

MergerDiagnostic merger_diag(const MergerSolution& sol, int k, double window, int points) {
    const double L = window > 0.0 ? window : sol.schedule().t(k);
    return sup_over_window(sol, sol.schedule().merge_time(k), L, points, [](double x) { return psi_gamma(1.0, x); });
}

MergerDiagnostic repair_diag(const MergerSolution& sol, int k, double delta, double window, int points) {
    return sup_over_window(sol, sol.schedule().repair_time(k, delta), window, points,
                           [delta](double x) { return -delta * std::tanh(0.5 * delta * x); });
}

} // namespace shockscope
