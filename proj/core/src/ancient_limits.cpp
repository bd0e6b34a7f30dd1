#include "shockscope/ancient_limits.hpp"

#include "shockscope/entire_solution.hpp"
#include "shockscope/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace shockscope {

namespace {

constexpr double kSymmetricGap = 1e-12;
constexpr double kNearDegenerate = 1e-6;
constexpr double kFixedPointTol = 1e-10;
constexpr int kFixedPointIters = 10000;
constexpr double kConsistency = 1e-3;

LimitCandidate constant(double v) { return {FrameKind::Constant, v, 0.0}; }
LimitCandidate shock(double c, double b) { return {FrameKind::ShockWithShift, c, b}; }

double log_integral(const Measure& nu, double t, double lin) {
    const LogReal J = gaussian_moments(nu, 0.25 * t, lin, 0.0, 0)[0];
    if (J.is_zero()) throw NumericalError("one-sided integral underflowed to zero");
    return J.log_abs();
}

} // namespace

const char* to_string(FrameKind kind) {
    switch (kind) {
    case FrameKind::InSupport: return "in_support";
    case FrameKind::Constant: return "constant";
    case FrameKind::ShockWithShift: return "shock_with_shift";
    }
    return "unknown";
}

FrameLimit classify_frame(const Measure& mu, double c) {
    FrameLimit out;
    out.speed = c;
    if (in_support(mu, c)) {
        out.limit = {FrameKind::InSupport, c, 0.0};
        return out;
    }
    const SupportGap gap = support_gap(mu, c);
    const double a = gap.below - c, b = gap.above - c;  // a < 0 < b, possibly infinite
    const double sum = a + b;
    const double scale = std::min(-a, b);
    if (std::isfinite(sum) && std::fabs(sum) <= kSymmetricGap * std::max(1.0, b)) {
        out.limit = shock(c, b);
        return out;
    }
    out.limit = sum < 0 ? constant(gap.above) : constant(gap.below);
    if (std::isfinite(sum) && std::fabs(sum) < kNearDegenerate * scale) {
        out.near_degenerate = true;
        out.alternatives.push_back(shock(c, 0.5 * (b - a)));
    }
    return out;
}

ShiftFunction::ShiftFunction(const Measure& shifted, double eps) : eps_(eps) {
    const SupportGap gap = support_gap(shifted, 0.0);
    if (!std::isfinite(gap.below) || !std::isfinite(gap.above) ||
        std::fabs(gap.below + gap.above) > kSymmetricGap * std::max(1.0, gap.above))
        throw InputError("shift function needs a symmetric support gap (-b, b) around 0");
    b_ = gap.above;
    if (!(eps > 0.0)) throw InputError("eps must be positive");
    const Measure right = restrict_to(shifted, b_, b_ + eps);
    const Measure left = restrict_to(shifted, -b_ - eps, -b_);
    if (right.empty() || left.empty()) throw InputError("empty one-sided neighbourhood of the gap");
    plus_ = act_galilean(right, -b_);
    minus_ = act_galilean(reflect(left), -b_);
}

double ShiftFunction::S(double t, double x) const {
    const double lp = log_integral(plus_, t, 0.5 * t * b_ - 0.5 * x);
    const double lm = log_integral(minus_, t, 0.5 * t * b_ + 0.5 * x);
    return (lp - lm) / b_;
}

double ShiftFunction::fixed_point(double t, double start) const {
    double x = start;
    for (int i = 0; i < kFixedPointIters; ++i) {
        const double next = S(t, x);
        if (!std::isfinite(next)) throw NumericalError("shift iteration produced a non-finite value");
        if (std::fabs(next - x) < kFixedPointTol) return next;
        x = next;
    }
    throw NumericalError("shift fixed-point iteration did not converge");
}

double ShiftFunction::profile(double t, double x) const {
    return -b_ * std::tanh(0.5 * b_ * (x - S(t, x)));
}

ShiftEstimate estimate_shift(const Measure& shifted, double t, std::optional<double> eps) {
    const SupportGap gap = support_gap(shifted, 0.0);
    const double e = eps.value_or(gap.above / 10.0);
    ShiftEstimate out;
    const ShiftFunction full(shifted, e), half(shifted, 0.5 * e);
    out.s = full.fixed_point(t);
    out.s_half = half.fixed_point(t, out.s);
    if (std::fabs(out.s - out.s_half) > kConsistency) {
        std::ostringstream msg;
        msg << "shift at t=" << t << " changes by " << std::fabs(out.s - out.s_half) << " when eps is halved";
        out.warnings.push_back(msg.str());
    }
    return out;
}

WindowFn power_window(double exponent) {
    return [exponent](double t) { return std::pow(std::fabs(t), exponent); };
}

WindowFn fixed_window(double half_width) {
    return [half_width](double) { return half_width; };
}

FrameError frame_limit_error(const Measure& mu, double c, double t, const WindowFn& window, int points) {
    if (!(t < 0.0)) throw InputError("ancient limits need t < 0");
    if (points < 2) throw InputError("need at least two window points");
    const FrameLimit lim = classify_frame(mu, c);
    const EntireSolution sol(mu);
    FrameError out;

    std::function<double(double)> predicted;
    if (lim.limit.kind == FrameKind::ShockWithShift) {
        const ShiftEstimate est = estimate_shift(act_galilean(mu, -c), t);
        out.shift = est.s;
        out.warnings = est.warnings;
        const double b = lim.limit.half_jump, s = est.s;
        predicted = [=](double x) { return c - b * std::tanh(0.5 * b * (x - s)); };
    } else {
        const double v = lim.limit.value;
        predicted = [v](double) { return v; };
    }
    const double L = window(t);
    for (int i = 0; i < points; ++i) {
        const double x = -L + 2.0 * L * i / (points - 1);
        out.sup_error = std::max(out.sup_error, std::fabs(sol.u(t, x + c * t) - predicted(x)));
    }
    return out;
}

double atom_probe(const Measure& mu, double t, double x) {
    if (!(t < 0.0)) throw InputError("atom probe needs t < 0");
    if (!in_support(mu, 0.0)) throw InputError("atom probe needs 0 in the support");
    const EntireSolution sol(mu);
    const double r = std::sqrt(-t);
    return r * sol.u(t, x * r);
}

AncientReport ancient_report(const Measure& mu, double c, const std::vector<double>& ladder,
                             const WindowFn& window) {
    AncientReport rep;
    rep.speed = c;
    rep.limit = classify_frame(mu, c);
    for (double t : ladder) {
        const FrameError e = frame_limit_error(mu, c, t, window);
        rep.errors_by_t.push_back({t, e.sup_error});
        if (e.shift) rep.s_eps_trace.push_back({t, *e.shift});
        rep.warnings.insert(rep.warnings.end(), e.warnings.begin(), e.warnings.end());
    }
    return rep;
}

} // namespace shockscope
