#pragma once

#include "shockscope/conservation_law.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shockscope {

// Uniform grid on [x_min, x_max] with n nodes (both ends included).
struct Grid {
    double x_min = 0.0;
    double x_max = 1.0;
    std::vector<double> values;
    double time = 0.0;

    std::size_t size() const { return values.size(); }
    double dx() const { return (x_max - x_min) / static_cast<double>(values.size() - 1); }
    double x(std::size_t i) const { return x_min + dx() * static_cast<double>(i); }

    static Grid sample(double x_min, double x_max, std::size_t n, const std::function<double(double)>& fn,
                       double time = 0.0);
};

struct SolverConfig {
    double cfl_safety = 0.4;
    // Snapshot spacing in time; 0 keeps only the initial and final states.
    double output_interval = 0.0;
    // |u_x| allowed at the two edge cells; nullopt disables the monitor
    // (for data that is not flat at the boundary).
    std::optional<double> boundary_gradient_tol = 1e-10;
};

struct RunInfo {
    std::size_t steps = 0;
    std::vector<std::string> warnings;
};

// u_t + f(u)_x = u_xx by an explicit conservative scheme: central
// convective flux when dx max|f'| <= 2 over the data range (the update is
// still monotone there), Engquist-Osher otherwise; central diffusion, forward Euler with
// dt = cfl * min(dx^2/2, dx/max|f'|) recomputed every step. The two end
// values are held at their initial (far-field) values.
std::vector<Grid> run_scl(const Flux& flux, const Grid& u0, double T, const SolverConfig& config = {},
                          RunInfo* info = nullptr);

struct ShiftSample {
    double t, s;
};

struct ShiftTrace {
    double level;
    std::vector<ShiftSample> samples;
};

// Location where each snapshot crosses (alpha + beta)/2, refined with
// monotone cubic (PCHIP) interpolation.
ShiftTrace extract_shift(std::span<const Grid> snapshots, double alpha, double beta);
double crossing(const Grid& g, double level);

// max over interior nodes of (u_x - 1/(k t)); <= 0 when the bound holds.
double check_oleinik(const Grid& g, double k);

// v = u_x - f(u) + c u + d, with centred differences (one-sided at the ends).
Grid aux_v(const Grid& g, const Flux& flux, double c, double d);

// sup_x |u(x) - phi(x - s)|
double shock_error(const Grid& g, const std::function<double(double)>& phi, double s);

double sup_norm(const Grid& g);
// Trapezoidal L1 norm.
double l1_norm(const Grid& g);
double l1_distance(const Grid& a, const Grid& b);

// Fills u (same size as the grid) with the background field at time t.
using FieldProvider = std::function<void(double t, std::span<double> u)>;

// w_t + f'(u) w_x = w_xx with first-order upwinding in the transport term.
// End values of w are held fixed.
std::vector<Grid> run_advect_diffuse(const Flux& flux, const FieldProvider& u_field, const Grid& w0, double T,
                                     const SolverConfig& config = {}, RunInfo* info = nullptr);

} // namespace shockscope
