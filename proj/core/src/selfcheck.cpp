#include "shockscope/selfcheck.hpp"

#include "shockscope/ancient_limits.hpp"
#include "shockscope/conservation_law.hpp"
#include "shockscope/entire_solution.hpp"
#include "shockscope/error.hpp"
#include "shockscope/measure.hpp"
#include "shockscope/merger_lab.hpp"
#include "shockscope/pde_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace shockscope {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

Measure merger_measure() {
    return Measure({{-2.0, 0.25}, {0.0, 0.5}, {2.0, 0.25}}, {});
}

Measure two_interval() {
    return Measure::uniform(-2.0, -1.0) + Measure::uniform(1.0, 2.0);
}

const Grid* snapshot_at(const std::vector<Grid>& snaps, double t) {
    for (const auto& g : snaps)
        if (std::fabs(g.time - t) < 1e-9 * std::max(1.0, t)) return &g;
    throw NumericalError("no snapshot at the requested time");
}

CheckResult c1() {
    CheckResult r{1, "Burgers merger identity on a 101x101 grid", false, 0.0, 1e-10, "", 0.0};
    const EntireSolution sol(merger_measure());
    const TxGridSpec spec{-25.0, 5.0, -30.0, 30.0, 101, 101};
    const auto samples = evaluate_grid([&](double t, double x) { return sol.u(t, x) - burgmerger_u(t, x); }, spec);
    for (const auto& s : samples) r.value = std::max(r.value, std::fabs(s.u));
    r.passed = r.value <= r.threshold;
    r.detail = "sup |u - (-2 sinh x/(e^-t + cosh x))|";
    return r;
}

CheckResult c2() {
    CheckResult r{2, "Lebesgue closed form vs quadrature", false, 0.0, 1e-8, "", 0.0};
    const EntireSolution sol(Measure::uniform(-1.0, 1.0));
    for (double t : {-9.0, -1.0, 1.0, 9.0})
        for (int i = 0; i < 41; ++i) {
            const double x = -10.0 + 0.5 * i;
            r.value = std::max(r.value, std::fabs(sol.u(t, x) - closed_lebesgue_u(t, x)));
        }
    r.passed = r.value <= r.threshold;
    r.detail = "t in {-9,-1,1,9}, 41 points on [-10,10]";
    return r;
}

CheckResult c3() {
    CheckResult r{3, "Lebesgue ancient frame limits at t=-1e4", false, 0.0, 0.02, "", 0.0};
    const Measure mu = Measure::uniform(-1.0, 1.0);
    bool kinds_ok = true;
    std::ostringstream d;
    for (double c : {0.0, 0.5, -0.5, 2.0, -2.0}) {
        const double expected = c > 1.0 ? 1.0 : (c < -1.0 ? -1.0 : c);
        const FrameLimit lim = classify_frame(mu, c);
        if (lim.limit.value != expected) kinds_ok = false;
        const double e = frame_limit_error(mu, c, -1e4, fixed_window(10.0)).sup_error;
        r.value = std::max(r.value, e);
        d << "c=" << c << ":" << fmt(e) << " ";
    }
    r.passed = kinds_ok && r.value <= r.threshold;
    r.detail = d.str() + (kinds_ok ? "" : "(limit values wrong)");
    return r;
}

CheckResult c4() {
    CheckResult r{4, "Two-interval shock with shift at t=-1e4", false, 0.0, 0.05, "", 0.0};
    const Measure mu = two_interval();
    const FrameLimit lim = classify_frame(mu, 0.0);
    const FrameError e = frame_limit_error(mu, 0.0, -1e4, fixed_window(5.0));
    const ShiftEstimate s = estimate_shift(mu, -1e4, 0.1);
    const double ds = std::fabs(s.s - s.s_half);
    r.value = e.sup_error;
    r.passed = lim.limit.kind == FrameKind::ShockWithShift && lim.limit.half_jump == 1.0 && e.sup_error <= 0.05 &&
               ds <= 0.02;
    r.detail = "|s_0.1 - s_0.05| = " + fmt(ds) + " (<= 0.02), s_0.1 = " + fmt(s.s);
    return r;
}

CheckResult c5() {
    CheckResult r{5, "Atom probe at t=-1e6", false, 0.0, 1e-2, "", 0.0};
    const double t = -1e6;
    const double with_atom = std::fabs(atom_probe(Measure::uniform(-1.0, 1.0) + Measure::dirac(0.0), t, 1.0));
    double without = 0.0;
    for (double x : {0.5, 1.0, 2.0})
        without = std::max(without, std::fabs(atom_probe(Measure::uniform(-1.0, 1.0), t, x) + x));
    r.value = with_atom;
    r.passed = with_atom <= 1e-2 && without <= 2e-2;
    r.detail = "Lebesgue+delta0 at x=1: " + fmt(with_atom) + "; Lebesgue |probe + x| = " + fmt(without) +
               " (<= 2e-2)";
    return r;
}

CheckResult c6() {
    CheckResult r{6, "Logarithmic front shift for Lebesgue + delta_1", false, 0.0, 0.1, "", 0.0};
    const EntireSolution sol(Measure::uniform(-1.0, 1.0) + Measure::dirac(1.0));
    std::ostringstream d;
    for (double t : {50.0, 100.0, 200.0}) {
        const double xbar = level_crossing([&](double x) { return sol.u(t, x); }, 0.0, -10.0, 0.5 * t);
        const double e = std::fabs(xbar - std::log1p(0.5 * t));
        r.value = std::max(r.value, e);
        d << "t=" << t << ": front " << fmt(xbar) << " vs " << fmt(std::log1p(0.5 * t)) << "; ";
    }
    r.passed = r.value <= r.threshold;
    r.detail = d.str();
    return r;
}

CheckResult c7() {
    CheckResult r{7, "Burgers relaxation from -tanh(2x)", false, 0.0, 0.1, "", 0.0};
    const Flux flux = Flux::burgers();
    const ShockProfile phi(flux, -1.0, 1.0);
    const Grid u0 = Grid::sample(-50.0, 50.0, 2001, [](double x) { return -std::tanh(2.0 * x); });
    SolverConfig cfg;
    cfg.output_interval = 4.0;
    const auto snaps = run_scl(flux, u0, 400.0, cfg);
    auto err = [&](double t) {
        const Grid& g = *snapshot_at(snaps, t);
        return shock_error(g, [&](double y) { return phi(y); }, crossing(g, 0.0));
    };
    auto vsup = [&](double t) { return sup_norm(aux_v(*snapshot_at(snaps, t), flux, phi.speed(), phi.d())); };
    const double e40 = err(40.0), e400 = err(400.0);
    const double v4 = vsup(4.0), v400 = vsup(400.0);
    r.value = e400;
    r.passed = e400 < e40 && e400 <= 0.1 && v400 < 0.5 * v4;
    r.detail = "err(40)=" + fmt(e40) + " err(400)=" + fmt(e400) + " sup|v|(4)=" + fmt(v4) + " sup|v|(400)=" + fmt(v400);
    return r;
}

CheckResult c8() {
    CheckResult r{8, "Step data 1 -> 0: shock speed", false, 0.0, 0.0, "", 0.0};
    const Flux flux = Flux::burgers();
    const Grid u0 = Grid::sample(-220.0, 320.0, 2701, [](double x) { return x < 0 ? 1.0 : (x > 0 ? 0.0 : 0.5); });
    const auto snaps = run_scl(flux, u0, 200.0, {});
    const double s = crossing(snaps.back(), 0.5);
    r.value = s / 200.0;
    r.threshold = 0.52;
    r.passed = r.value >= 0.48 && r.value <= 0.52;
    r.detail = "s(200)/200 must lie in [0.48, 0.52]";
    return r;
}

CheckResult c9() {
    CheckResult r{9, "Oleinik one-sided bound for random data", false, -1e300, 1e-6, "", 0.0};
    const Flux flux = Flux::burgers();
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    SolverConfig cfg;
    cfg.output_interval = 1.0;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> cells(10);
        for (auto& v : cells) v = U(rng);
        auto u0fn = [&](double x) {
            if (x < -5.0 || x >= 5.0) return 0.0;
            return cells[static_cast<std::size_t>(std::floor(x + 5.0))];
        };
        const Grid u0 = Grid::sample(-75.0, 75.0, 3001, u0fn);
        const auto snaps = run_scl(flux, u0, 20.0, cfg);
        for (double t : {1.0, 5.0, 20.0}) r.value = std::max(r.value, check_oleinik(*snapshot_at(snaps, t), 1.0));
    }
    r.passed = r.value <= r.threshold;
    r.detail = "max over 5 data and t in {1,5,20} of u_x - 1/t";
    return r;
}

CheckResult c10() {
    CheckResult r{10, "Advection-diffusion L1 and L1-Linf decay", false, 0.0, 0.0, "", 0.0};
    const Flux flux = Flux::burgers();
    const Grid w0 = Grid::sample(-40.0, 40.0, 801, [](double x) { return std::exp(-(x - 3.0) * (x - 3.0)); });
    const double x_min = w0.x_min, dx = w0.dx();
    FieldProvider background = [&](double t, std::span<double> u) {
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = burgmerger_u(t, x_min + dx * static_cast<double>(i));
    };
    SolverConfig cfg;
    cfg.output_interval = 1.0;
    const auto snaps = run_advect_diffuse(flux, background, w0, 100.0, cfg);
    const double l1_0 = l1_norm(w0);
    double l1_increase = 0.0, prev = l1_0;
    for (const auto& g : snaps) {
        const double l1 = l1_norm(g);
        l1_increase = std::max(l1_increase, l1 - prev);
        prev = l1;
    }
    auto ratio_at = [&](const Grid& g) { return std::sqrt(g.time) * sup_norm(g) / l1_0; };
    const double r1 = ratio_at(*snapshot_at(snaps, 1.0));
    double worst = 0.0;
    for (const auto& g : snaps)
        if (g.time >= 1.0) worst = std::max(worst, ratio_at(g));
    r.value = worst / r1;
    r.threshold = 3.0;
    r.passed = l1_increase <= 1e-8 * l1_0 && r.value <= r.threshold;
    r.detail = "max L1 increase " + fmt(l1_increase) + " (slack 1e-8 |w0|_1); sup sqrt(t)|w|_inf/|w0|_1 over [1,100] = " +
               fmt(worst) + ", value at t=1: " + fmt(r1);
    return r;
}

CheckResult c11() {
    CheckResult r{11, "Merger at tau_3 on |x| <= 100", false, 0.0, 0.05, "", 0.0};
    const auto start = Clock::now();
    const MergerSolution sol(MergerSchedule::standard());
    const MergerDiagnostic d = merger_diag(sol, 3, 100.0, 2001);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    r.value = d.sup_error;
    r.passed = d.sup_error <= 0.05 && secs < 5.0;
    // Effective gamma at tau_3: U(tau, 0) = T3 (1 + gamma) with T3 the j = 3 term.
    const auto& S = sol.schedule();
    const LogReal T3 = LogReal::from_log(-S.t(3)) * vm_eval(S.N() * S.t(3), d.time, 0.0);
    const double gamma = (sol.U(d.time, 0.0) / T3).to_double() - 1.0;
    double fit = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        const double x = -100.0 + 0.1 * i;
        fit = std::max(fit, std::fabs(sol.u(d.time, x) - psi_gamma(gamma, x)));
    }
    r.detail = "tau_3 = " + fmt(d.time) + ", evaluation " + fmt(secs) + " s (< 5 s); effective gamma " + fmt(gamma) +
               ", sup |u - Psi_gamma| = " + fmt(fit);
    return r;
}

CheckResult c12() {
    CheckResult r{12, "Repair to -delta tanh(delta x/2) at N t_3/delta", false, 0.0, 1e-3, "", 0.0};
    const MergerSolution sol(MergerSchedule::standard());
    std::ostringstream d;
    for (double delta : {0.5, 1.0, 1.5}) {
        const double e = repair_diag(sol, 3, delta, 5.0).sup_error;
        r.value = std::max(r.value, e);
        d << "delta=" << delta << ":" << fmt(e) << " ";
    }
    r.passed = r.value <= r.threshold;
    r.detail = d.str();
    return r;
}

CheckResult c13() {
    CheckResult r{13, "V_m long/short bounds and intermediate asymptotics", false, 0.0, 0.0, "", 0.0};
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int long_fail = 0, short_fail = 0;
    for (int i = 0; i < 100; ++i) {
        const double m = 0.5 + 49.5 * unit(rng);
        const double t = std::pow(10.0, -2.0 + 8.0 * unit(rng));
        const double x = -3.0 * m + 6.0 * m * unit(rng);
        if (!check_long_bounds(m, t, x).all()) ++long_fail;
    }
    for (int i = 0; i < 100; ++i) {
        const double m = 4.0 + 996.0 * unit(rng);
        const double t = (0.01 + 0.99 * unit(rng)) * m / 4.0 * 0.999;
        const double room = 0.5 * m - 2.0 * t;
        const double x = -room + 2.0 * room * unit(rng);
        if (!check_short_bounds(m, t, x).all()) ++short_fail;
    }
    double worst_scaled = 0.0;
    for (double m : {1e4, 1e6})
        for (double delta : {0.5, 1.0, 1.5})
            for (double x : {0.0, 1.3, -2.7}) {
                const double dev = std::fabs(std::expm1(vm_eval(m, m / delta, x).log_abs() -
                                                        inter_asymptotic(m, delta, x).log_abs()));
                worst_scaled = std::max(worst_scaled, dev * m);
            }
    r.value = worst_scaled;
    r.threshold = 100.0;
    r.passed = long_fail == 0 && short_fail == 0 && worst_scaled <= 100.0;
    r.detail = "long failures " + std::to_string(long_fail) + "/100, short failures " + std::to_string(short_fail) +
               "/100, max m*|V/asym - 1| = " + fmt(worst_scaled);
    return r;
}

Measure random_measure(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Atom> atoms;
    std::vector<DensityPiece> pieces;
    const int n_atoms = static_cast<int>(unit(rng) * 3.0);
    const int n_pieces = n_atoms == 0 ? 1 + static_cast<int>(unit(rng) * 2.0) : static_cast<int>(unit(rng) * 3.0);
    // Pieces on disjoint slots of [-3, 3]; atoms anywhere.
    for (int i = 0; i < n_pieces; ++i) {
        const double lo = -3.0 + 3.0 * i + unit(rng);
        const double hi = lo + 0.2 + 1.5 * unit(rng);
        pieces.push_back({lo, hi, {0.1 + unit(rng), unit(rng) * 0.5}, 2.0 * unit(rng) - 1.0, 0.0});
        if (pieces.back().polynomial(lo) < 0 || pieces.back().polynomial(hi) < 0) pieces.back().coeffs[1] = 0.0;
    }
    for (int i = 0; i < n_atoms; ++i) atoms.push_back({-3.0 + 6.0 * unit(rng), 0.1 + unit(rng)});
    return Measure(std::move(atoms), std::move(pieces));
}

CheckResult c14() {
    CheckResult r{14, "Property suites: monotonicity, comparison, L1 contraction, refinement", false, 0.0, 0.0, "", 0.0};
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // (a) u_x <= 0, by centred differences of u itself.
    double worst_slope = -1e300;
    for (int i = 0; i < 1000; ++i) {
        const EntireSolution sol(random_measure(rng));
        const double t = -20.0 + 40.0 * unit(rng), x = -20.0 + 40.0 * unit(rng);
        const double h = 1e-3;
        worst_slope = std::max(worst_slope, (sol.u(t, x + h) - sol.u(t, x - h)) / (2.0 * h));
    }
    const bool mono_ok = worst_slope <= 1e-8;

    // (b) comparison principle and L1 contraction on ordered pairs.
    const Flux flux = Flux::burgers();
    SolverConfig cfg;
    cfg.output_interval = 0.5;
    double worst_order = -1e300, worst_growth = -1e300;
    for (int p = 0; p < 5; ++p) {
        const double a1 = 0.5 + unit(rng), a2 = unit(rng), c0 = 2.0 * unit(rng) - 1.0, amp = 0.2 + unit(rng);
        auto base = [=](double x) { return -0.5 * std::tanh(a1 * x) + 0.3 * std::exp(-(x - c0) * (x - c0)) * a2; };
        auto upper = [=](double x) { return base(x) + amp * std::exp(-x * x / 2.0); };
        const Grid u0 = Grid::sample(-40.0, 40.0, 1601, base);
        const Grid v0 = Grid::sample(-40.0, 40.0, 1601, upper);
        const auto us = run_scl(flux, u0, 5.0, cfg);
        const auto vs = run_scl(flux, v0, 5.0, cfg);
        double prev = l1_distance(u0, v0);
        const double initial = prev;
        for (std::size_t k = 0; k < us.size(); ++k) {
            for (std::size_t i = 0; i < us[k].size(); ++i)
                worst_order = std::max(worst_order, us[k].values[i] - vs[k].values[i]);
            const double d = l1_distance(us[k], vs[k]);
            worst_growth = std::max(worst_growth, (d - prev) / initial);
            prev = d;
        }
    }
    const bool order_ok = worst_order <= 1e-10;
    const bool contraction_ok = worst_growth <= 1e-8;

    // (c) first-order convergence to the steady Burgers shock.
    const ShockProfile phi(flux, -1.0, 1.0);
    auto steady_error = [&](std::size_t n) {
        const Grid u0 = Grid::sample(-30.0, 30.0, n, [&](double x) { return phi(x); });
        const auto snaps = run_scl(flux, u0, 10.0, {});
        return shock_error(snaps.back(), [&](double y) { return phi(y); }, 0.0);
    };
    const double e_coarse = steady_error(301), e_fine = steady_error(601);
    const double order = std::log2(e_coarse / e_fine);
    const bool refine_ok = order >= 1.0;

    r.value = order;
    r.threshold = 1.0;
    r.passed = mono_ok && order_ok && contraction_ok && refine_ok;
    r.detail = "max FD slope " + fmt(worst_slope) + " (<= 1e-8); max (u - v) " + fmt(worst_order) +
               " (<= 1e-10); max relative L1 growth " + fmt(worst_growth) + " (<= 1e-8); refinement order " +
               fmt(order) + " (>= 1, errors " + fmt(e_coarse) + ", " + fmt(e_fine) + ")";
    return r;
}

} // namespace

CheckResult run_criterion(int id) {
    static const std::function<CheckResult()> table[kCriterionCount] = {c1, c2, c3, c4,  c5,  c6,  c7,
                                                                         c8, c9, c10, c11, c12, c13, c14};
    if (id < 1 || id > kCriterionCount) throw InputError("criterion id out of range");
    const auto start = Clock::now();
    CheckResult r;
    try {
        r = table[id - 1]();
    } catch (const std::exception& e) {
        r.id = id;
        r.name = "criterion " + std::to_string(id);
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

std::vector<CheckResult> run_acceptance(const std::function<void(const CheckResult&)>& on_result) {
    std::vector<CheckResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        out.push_back(run_criterion(id));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string format_result(const CheckResult& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << "  [" << (r.id < 10 ? " " : "") << r.id << "] " << r.name
       << "  value=" << fmt(r.value) << " threshold=" << fmt(r.threshold) << "  (" << fmt(r.seconds) << " s)";
    if (!r.detail.empty()) os << "  " << r.detail;
    return os.str();
}

} // namespace shockscope
