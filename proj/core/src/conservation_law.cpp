#include "shockscope/conservation_law.hpp"

#include "shockscope/error.hpp"

#include <boost/math/interpolators/quintic_hermite.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>

namespace shockscope {

namespace {

constexpr int kConvexitySamples = 256;
constexpr double kLimitTol = 1e-14;
constexpr double kTailCap = 200.0;
constexpr double kStepScale = 0.01;

double horner(const std::vector<double>& c, double u) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
    return acc;
}

std::vector<double> derivative(const std::vector<double>& c) {
    std::vector<double> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
    if (d.empty()) d.push_back(0.0);
    return d;
}

} // namespace

Flux Flux::burgers() {
    Flux f = polynomial({0.0, 0.0, 0.5});
    f.kind_ = Kind::Burgers;
    return f;
}

Flux Flux::polynomial(std::vector<double> coeffs) {
    if (coeffs.empty()) throw InputError("flux polynomial needs coefficients");
    for (double c : coeffs)
        if (!std::isfinite(c)) throw InputError("flux coefficient is not finite");
    Flux f;
    f.kind_ = Kind::Polynomial;
    f.coeffs_ = std::move(coeffs);
    f.d1_ = derivative(f.coeffs_);
    f.d2_ = derivative(f.d1_);
    return f;
}

double Flux::f(double u) const { return horner(coeffs_, u); }
double Flux::df(double u) const { return horner(d1_, u); }
double Flux::d2f(double u) const { return horner(d2_, u); }

double Flux::convexity(double lo, double hi) const {
    if (lo > hi) std::swap(lo, hi);
    if (lo == hi) {
        const double k = d2f(lo);
        if (!(k > 0.0)) throw InputError("flux is not convex at u = " + std::to_string(lo));
        return k;
    }
    double best = d2f(lo), best_u = lo, peak = std::fabs(best);
    const double h = (hi - lo) / (kConvexitySamples - 1);
    for (int i = 1; i < kConvexitySamples; ++i) {
        const double u = i + 1 == kConvexitySamples ? hi : lo + h * i;
        const double v = d2f(u);
        peak = std::max(peak, std::fabs(v));
        if (v < best) {
            best = v;
            best_u = u;
        }
    }
    const auto r = boost::math::tools::brent_find_minima([this](double u) { return d2f(u); },
                                                         std::max(lo, best_u - h), std::min(hi, best_u + h), 52);
    best = std::min(best, r.second);
    if (!(best > 1e-12 * std::max(peak, 1.0)))
        throw InputError("flux is not uniformly convex on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "]: min f'' = " + std::to_string(best));
    return best;
}

double Flux::max_speed(double lo, double hi) const { return std::max(std::fabs(df(lo)), std::fabs(df(hi))); }

double Flux::sonic_point(double lo, double hi) const {
    if (lo > hi) std::swap(lo, hi);
    if (kind_ == Kind::Burgers) return std::clamp(0.0, lo, hi);
    if (df(lo) >= 0.0) return lo;
    if (df(hi) <= 0.0) return hi;
    double a = lo, b = hi;
    for (int i = 0; i < 200 && b - a > 1e-15 * std::max(1.0, std::fabs(a)); ++i) {
        const double m = 0.5 * (a + b);
        (df(m) < 0.0 ? a : b) = m;
    }
    return 0.5 * (a + b);
}

RankineHugoniot rankine_hugoniot(const Flux& flux, double alpha, double beta) {
    if (!(beta > alpha)) throw InputError("shock needs left state beta > right state alpha");
    const double c = (flux.f(beta) - flux.f(alpha)) / (beta - alpha);
    return {c, flux.f(beta) - c * beta};
}

struct ShockProfile::Table {
    double y0, h;
    std::size_t n;
    boost::math::interpolators::cardinal_quintic_hermite<std::vector<double>> interp;
};

ShockProfile::ShockProfile(const Flux& flux, double alpha, double beta)
    : flux_(flux), alpha_(alpha), beta_(beta) {
    const RankineHugoniot rh = rankine_hugoniot(flux, alpha, beta);
    c_ = rh.c;
    d_ = rh.d;
    lambda_plus_ = c_ - flux.df(alpha);
    lambda_minus_ = flux.df(beta) - c_;
    if (!(lambda_plus_ > 0.0) || !(lambda_minus_ > 0.0))
        throw InputError("states violate the Lax entropy condition");
    // A monotone profile needs f - c u - d < 0 strictly between the states;
    // f'' may vanish at isolated points.
    for (int i = 1; i < kConvexitySamples; ++i) {
        const double u = alpha + (beta - alpha) * i / kConvexitySamples;
        if (!(flux.f(u) - c_ * u - d_ < 0.0))
            throw InputError("no monotone profile: f - c u - d changes sign at u = " + std::to_string(u));
    }

    using State = std::array<double, 1>;
    namespace ode = boost::numeric::odeint;
    auto rhs = [&](const State& p, State& dp, double) { dp[0] = flux.f(p[0]) - c_ * p[0] - d_; };
    const double h = kStepScale / std::max(lambda_plus_, lambda_minus_);
    const double tol = kLimitTol * std::max({1.0, std::fabs(alpha), std::fabs(beta)});

    auto sweep = [&](double limit, double rate, double dir) {
        std::vector<double> out{0.5 * (alpha + beta)};
        State p{out.front()};
        auto stepper = ode::make_controlled(1e-15, 1e-14, ode::runge_kutta_fehlberg78<State>());
        const double cap = kTailCap / rate;
        double y = 0.0;
        while (std::fabs(p[0] - limit) >= tol && std::fabs(y) < cap) {
            ode::integrate_adaptive(stepper, rhs, p, y, y + dir * h, dir * h * 0.25);
            y += dir * h;
            out.push_back(p[0]);
        }
        return out;
    };
    const auto right = sweep(alpha, lambda_plus_, 1.0);
    const auto left = sweep(beta, lambda_minus_, -1.0);

    std::vector<double> y_vals(left.rbegin(), left.rend());
    y_vals.insert(y_vals.end(), right.begin() + 1, right.end());
    std::vector<double> d1(y_vals.size()), d2(y_vals.size());
    for (std::size_t i = 0; i < y_vals.size(); ++i) {
        const double g = flux.f(y_vals[i]) - c_ * y_vals[i] - d_;
        d1[i] = g;
        d2[i] = (flux.df(y_vals[i]) - c_) * g;
    }
    const double y0 = -h * static_cast<double>(left.size() - 1);
    const std::size_t n = y_vals.size();
    table_ = std::make_shared<const Table>(Table{
        y0, h, n,
        boost::math::interpolators::cardinal_quintic_hermite<std::vector<double>>(
            std::move(y_vals), std::move(d1), std::move(d2), y0, h)});
}

double ShockProfile::y_min() const { return table_->y0; }
double ShockProfile::y_max() const { return table_->y0 + table_->h * static_cast<double>(table_->n - 1); }

double ShockProfile::operator()(double y) const {
    if (std::isnan(y)) return y;
    if (y <= y_min()) return beta_;
    if (y >= y_max()) return alpha_;
    return table_->interp(y);
}

double ShockProfile::derivative(double y) const {
    if (y <= y_min() || y >= y_max()) return 0.0;
    return table_->interp.prime(y);
}

double ShockProfile::ode_residual(double y) const {
    const double p = (*this)(y);
    return derivative(y) - (flux_.f(p) - c_ * p - d_);
}

double oleinik_rhs(double k, double t) {
    if (!(k > 0.0)) throw InputError("Oleinik bound needs a positive convexity constant");
    if (!(t > 0.0)) throw InputError("Oleinik bound needs t > 0");
    return 1.0 / (k * t);
}

double oleinik_rhs(const Flux& flux, double lo, double hi, double t) {
    return oleinik_rhs(flux.convexity(lo, hi), t);
}

} // namespace shockscope
