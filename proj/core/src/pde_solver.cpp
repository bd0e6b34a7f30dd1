#include "shockscope/pde_solver.hpp"

#include "shockscope/error.hpp"

#include <cmath>
using std::isnan;  // pchip.hpp calls isnan unqualified
#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

namespace shockscope {

namespace {

constexpr double kMaxPrincipleSlack = 1e-10;
constexpr double kFarFieldMargin = 10.0;

void validate_grid(const Grid& g) {
    if (g.values.size() < 3) throw InputError("grid needs at least 3 nodes");
    if (!(g.x_max > g.x_min)) throw InputError("grid needs x_min < x_max");
    for (double v : g.values)
        if (!std::isfinite(v)) throw InputError("grid values must be finite");
}

void validate_config(const SolverConfig& c, double T) {
    if (!(c.cfl_safety > 0.0) || c.cfl_safety > 0.5)
        throw InputError("cfl_safety must lie in (0, 0.5] for a monotone scheme");
    if (!(T >= 0.0) || !std::isfinite(T)) throw InputError("final time must be finite and non-negative");
    if (c.output_interval < 0.0) throw InputError("output interval must be non-negative");
}

void check_boundary(const Grid& g, const SolverConfig& c) {
    if (!c.boundary_gradient_tol) return;
    const std::size_t n = g.size();
    const double left = std::fabs(g.values[1] - g.values[0]) / g.dx();
    const double right = std::fabs(g.values[n - 1] - g.values[n - 2]) / g.dx();
    if (std::max(left, right) >= *c.boundary_gradient_tol) {
        std::ostringstream msg;
        msg << "boundary contamination at t=" << g.time << ": edge gradient " << std::max(left, right);
        throw NumericalError(msg.str());
    }
}

// Next time at which a snapshot is due.
double next_output(double t, double T, double interval) {
    if (interval <= 0.0) return T;
    const double k = std::floor(t / interval + 1e-9) + 1.0;
    return std::min(T, k * interval);
}

// central: (f_i + f_{i+1})/2 at every interface. Only used when dx max|f'| <= 2,
// where the update is still monotone; otherwise Engquist-Osher.
template <class F>
void scl_loop(F f, bool central, const Flux& flux, Grid& g, double T, double sonic, const SolverConfig& cfg,
              std::vector<Grid>& out, double lo, double hi, std::size_t& steps) {
    const std::size_t n = g.size();
    const double dx = g.dx();
    const double fs = f(sonic);
    std::vector<double> fp(n), fm(n), next(n);
    double umin = lo, umax = hi;
    double t = g.time;
    double target = next_output(t, T, cfg.output_interval);
    while (t < T) {
        const double speed = std::max(flux.max_speed(umin, umax), 1e-300);
        double dt = cfg.cfl_safety * std::min(0.5 * dx * dx, dx / speed);
        bool hit = false;
        if (t + dt >= target) {
            dt = target - t;
            hit = true;
        }
        const double r = dt / dx, q = dt / (dx * dx);
        auto& u = g.values;
        if (central) {
            for (std::size_t i = 0; i < n; ++i) fp[i] = fm[i] = 0.5 * f(u[i]);
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                fp[i] = f(std::max(u[i], sonic)) - fs;
                fm[i] = f(std::min(u[i], sonic));
            }
        }
        next[0] = u[0];
        next[n - 1] = u[n - 1];
        double mn = std::min(u[0], u[n - 1]), mx = std::max(u[0], u[n - 1]);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double flux_right = fp[i] + fm[i + 1];
            const double flux_left = fp[i - 1] + fm[i];
            const double v = u[i] - r * (flux_right - flux_left) + q * (u[i + 1] - 2.0 * u[i] + u[i - 1]);
            next[i] = v;
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        u.swap(next);
        umin = mn;
        umax = mx;
        ++steps;
        t = hit ? target : t + dt;
        g.time = t;
        if (umin < lo - kMaxPrincipleSlack || umax > hi + kMaxPrincipleSlack)
            throw NumericalError("maximum principle violated; scheme lost monotonicity");
        if (hit) {
            check_boundary(g, cfg);
            out.push_back(g);
            target = next_output(t, T, cfg.output_interval);
        }
    }
}

} // namespace

Grid Grid::sample(double x_min, double x_max, std::size_t n, const std::function<double(double)>& fn, double time) {
    if (n < 2) throw InputError("grid needs at least 2 nodes");
    Grid g{x_min, x_max, std::vector<double>(n), time};
    for (std::size_t i = 0; i < n; ++i) g.values[i] = fn(g.x(i));
    return g;
}

std::vector<Grid> run_scl(const Flux& flux, const Grid& u0, double T, const SolverConfig& config, RunInfo* info) {
    validate_grid(u0);
    validate_config(config, T);
    const auto [lo_it, hi_it] = std::minmax_element(u0.values.begin(), u0.values.end());
    const double lo = *lo_it, hi = *hi_it;
    const double sonic = flux.sonic_point(lo, hi);

    RunInfo local;
    RunInfo& ri = info ? *info : local;
    const double half_width = 0.5 * (u0.x_max - u0.x_min);
    if (half_width < kFarFieldMargin + flux.max_speed(lo, hi) * T) {
        std::ostringstream msg;
        msg << "domain half-width " << half_width << " is below 10 + max|f'| T = "
            << kFarFieldMargin + flux.max_speed(lo, hi) * T << "; relying on the boundary monitor";
        ri.warnings.push_back(msg.str());
    }

    // u stays in [lo, hi], so the cell Peclet number is bounded for the whole run.
    const bool central = u0.dx() * flux.max_speed(lo, hi) <= 2.0;
    std::vector<Grid> out{u0};
    Grid g = u0;
    if (flux.kind() == Flux::Kind::Burgers)
        scl_loop([](double u) { return 0.5 * u * u; }, central, flux, g, T, sonic, config, out, lo, hi, ri.steps);
    else
        scl_loop([&flux](double u) { return flux.f(u); }, central, flux, g, T, sonic, config, out, lo, hi,
                 ri.steps);
    return out;
}

double crossing(const Grid& g, double level) {
    const auto& u = g.values;
    const std::size_t n = u.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = u[i] - level, b = u[i + 1] - level;
        if (a == 0.0) return g.x(i);
        if ((a > 0) == (b > 0) && b != 0.0) continue;
        if (b == 0.0) return g.x(i + 1);
        // Local PCHIP fit over a few neighbouring nodes, then a bracketed root.
        const std::size_t lo = i >= 3 ? i - 3 : 0, hi = std::min(n - 1, i + 4);
        std::vector<double> xs, ys;
        for (std::size_t j = lo; j <= hi; ++j) {
            xs.push_back(g.x(j));
            ys.push_back(u[j]);
        }
        boost::math::interpolators::pchip<std::vector<double>> p(std::move(xs), std::move(ys));
        auto h = [&](double x) { return p(x) - level; };
        std::uintmax_t iters = 200;
        const auto r = boost::math::tools::toms748_solve(h, g.x(i), g.x(i + 1), a, b,
                                                         boost::math::tools::eps_tolerance<double>(50), iters);
        return 0.5 * (r.first + r.second);
    }
    throw NumericalError("profile does not cross the midpoint level");
}

ShiftTrace extract_shift(std::span<const Grid> snapshots, double alpha, double beta) {
    ShiftTrace trace{0.5 * (alpha + beta), {}};
    for (const auto& g : snapshots) trace.samples.push_back({g.time, crossing(g, trace.level)});
    return trace;
}

double check_oleinik(const Grid& g, double k) {
    if (!(g.time > 0.0)) throw InputError("Oleinik check needs t > 0");
    const double bound = 1.0 / (k * g.time);
    const double h2 = 2.0 * g.dx();
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < g.size(); ++i)
        worst = std::max(worst, (g.values[i + 1] - g.values[i - 1]) / h2 - bound);
    return worst;
}

Grid aux_v(const Grid& g, const Flux& flux, double c, double d) {
    validate_grid(g);
    Grid v = g;
    const auto& u = g.values;
    const std::size_t n = u.size();
    const double dx = g.dx();
    for (std::size_t i = 0; i < n; ++i) {
        double ux;
        if (i == 0)
            ux = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * dx);
        else if (i + 1 == n)
            ux = (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) / (2.0 * dx);
        else
            ux = (u[i + 1] - u[i - 1]) / (2.0 * dx);
        v.values[i] = ux - flux.f(u[i]) + c * u[i] + d;
    }
    return v;
}

double shock_error(const Grid& g, const std::function<double(double)>& phi, double s) {
    double err = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) err = std::max(err, std::fabs(g.values[i] - phi(g.x(i) - s)));
    return err;
}

double sup_norm(const Grid& g) {
    double m = 0.0;
    for (double v : g.values) m = std::max(m, std::fabs(v));
    return m;
}

double l1_norm(const Grid& g) {
    const auto& u = g.values;
    double s = 0.5 * (std::fabs(u.front()) + std::fabs(u.back()));
    for (std::size_t i = 1; i + 1 < u.size(); ++i) s += std::fabs(u[i]);
    return s * g.dx();
}

double l1_distance(const Grid& a, const Grid& b) {
    if (a.size() != b.size() || a.x_min != b.x_min || a.x_max != b.x_max)
        throw InputError("L1 distance needs matching grids");
    Grid d = a;
    for (std::size_t i = 0; i < d.size(); ++i) d.values[i] -= b.values[i];
    return l1_norm(d);
}

std::vector<Grid> run_advect_diffuse(const Flux& flux, const FieldProvider& u_field, const Grid& w0, double T,
                                     const SolverConfig& config, RunInfo* info) {
    validate_grid(w0);
    validate_config(config, T);
    const std::size_t n = w0.size();
    const double dx = w0.dx();
    std::vector<double> u(n), a(n), next(n);
    const auto [lo_it, hi_it] = std::minmax_element(w0.values.begin(), w0.values.end());
    const double lo = *lo_it, hi = *hi_it;

    RunInfo local;
    RunInfo& ri = info ? *info : local;
    std::vector<Grid> out{w0};
    Grid g = w0;
    double t = g.time;
    double target = next_output(t, T, config.output_interval);
    while (t < T) {
        u_field(t, u);
        double speed = 1e-300;
        for (std::size_t i = 0; i < n; ++i) {
            if (!std::isfinite(u[i])) throw InputError("background field is not finite");
            a[i] = flux.df(u[i]);
            speed = std::max(speed, std::fabs(a[i]));
        }
        double dt = config.cfl_safety * std::min(0.5 * dx * dx, dx / speed);
        bool hit = false;
        if (t + dt >= target) {
            dt = target - t;
            hit = true;
        }
        const double r = dt / dx, q = dt / (dx * dx);
        auto& w = g.values;
        next[0] = w[0];
        next[n - 1] = w[n - 1];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double grad = a[i] > 0.0 ? w[i] - w[i - 1] : w[i + 1] - w[i];
            next[i] = w[i] - r * a[i] * grad + q * (w[i + 1] - 2.0 * w[i] + w[i - 1]);
        }
        w.swap(next);
        ++ri.steps;
        t = hit ? target : t + dt;
        g.time = t;
        if (hit) {
            const auto [mn, mx] = std::minmax_element(w.begin(), w.end());
            if (*mn < lo - kMaxPrincipleSlack || *mx > hi + kMaxPrincipleSlack)
                throw NumericalError("maximum principle violated in advection-diffusion");
            check_boundary(g, config);
            out.push_back(g);
            target = next_output(t, T, config.output_interval);
        }
    }
    return out;
}

} // namespace shockscope
