#pragma once

#include "shockscope/measure.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace shockscope {

// Limit of u(t, x + c t) as t -> -infinity.
enum class FrameKind {
    InSupport,      // the constant c
    Constant,       // the nearer support point across the gap
    ShockWithShift  // c + phi_{b,-b}(x - s(t)) with a sublinear shift s
};

const char* to_string(FrameKind kind);

struct LimitCandidate {
    FrameKind kind = FrameKind::InSupport;
    double value = 0.0;      // limit value; the shock midpoint c for shocks
    double half_jump = 0.0;  // b for shocks (states c + b on the left, c - b on the right)
};

struct FrameLimit {
    double speed = 0.0;
    LimitCandidate limit;
    // Gap nearly symmetric (|a + b| < 1e-6 b): both readings are reported.
    bool near_degenerate = false;
    std::vector<LimitCandidate> alternatives;
};

FrameLimit classify_frame(const Measure& mu, double c);

// Shift function for a measure whose support gap around 0 is (-b, b):
//   S_eps(t,x) = (1/b) log(J+/J-),
//   J+-(t,x) = int_[0,eps] exp(-+x y/2) exp(t(b y/2 + y^2/4)) dnu+-(y),
// where nu+ and nu- are mu on [b, b+eps] and [-b-eps, -b] pulled back by
// z = +-(b + y).
class ShiftFunction {
public:
    ShiftFunction(const Measure& shifted, double eps);

    double b() const { return b_; }
    double eps() const { return eps_; }
    double S(double t, double x) const;
    // s_eps(t): the solution of x = S_eps(t, x) by fixed-point iteration.
    double fixed_point(double t, double start = 0.0) const;
    // w_eps(t,x) = -b tanh(b (x - S_eps(t,x)) / 2)
    double profile(double t, double x) const;

private:
    Measure plus_, minus_;
    double b_ = 0.0, eps_ = 0.0;
};

struct ShiftEstimate {
    double s = 0.0;       // with eps
    double s_half = 0.0;  // with eps/2
    std::vector<std::string> warnings;
};

// s_eps(t) in the shifted frame; eps defaults to b/10 and is cross-checked
// against eps/2 (a warning when they differ by more than 1e-3).
ShiftEstimate estimate_shift(const Measure& shifted, double t, std::optional<double> eps = std::nullopt);

using WindowFn = std::function<double(double)>;
WindowFn power_window(double exponent = 0.9);  // L(t) = |t|^exponent
WindowFn fixed_window(double half_width);

struct FrameError {
    double sup_error = 0.0;
    std::optional<double> shift;
    std::vector<std::string> warnings;
};

// sup over |x| <= L(t) (101 points) of |u(t, x + c t) - predicted limit|.
FrameError frame_limit_error(const Measure& mu, double c, double t, const WindowFn& window = power_window(),
                             int points = 101);

// |t|^{1/2} u(t, x |t|^{1/2}) for t < 0; needs 0 in the support.
double atom_probe(const Measure& mu, double t, double x);

struct AncientReport {
    double speed = 0.0;
    FrameLimit limit;
    struct ErrorSample {
        double t, sup_err;
    };
    struct ShiftSample {
        double t, s;
    };
    std::vector<ErrorSample> errors_by_t;
    std::vector<ShiftSample> s_eps_trace;
    std::vector<std::string> warnings;
};

AncientReport ancient_report(const Measure& mu, double c, const std::vector<double>& ladder,
                             const WindowFn& window = power_window());

} // namespace shockscope
