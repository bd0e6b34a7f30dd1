#pragma once

#include "shockscope/log_real.hpp"
#include "shockscope/measure.hpp"

#include <functional>
#include <vector>

namespace shockscope {

// Entire Burgers solution generated by a measure:
//   U(t,x) = int exp(-z x/2 + z^2 t/4) dmu(z),  u = -2 U_x / U,
// i.e. u is the mean of z under the tilted measure and u_x = -Var/2.
class EntireSolution {
public:
    explicit EntireSolution(const Measure& mu, QuadratureConfig config = {});

    const Measure& measure() const { return mu_; }
    Support support() const { return support_; }

    LogReal U(double t, double x) const;
    double u(double t, double x) const;
    double dx_u(double t, double x) const;

private:
    Measure mu_;
    Support support_;
    QuadratureConfig config_;
};

// Closed forms for mu = Lebesgue on [-1, 1] (density 1, not normalized).
LogReal lebesgue_U(double t, double x);
double closed_lebesgue_u(double t, double x);
// mu = Lebesgue on [-1, 1] plus a unit atom at 0. Requires t != 0.
double closed_lebesgue_atom0_u(double t, double x);

// u = -2 sinh x / (e^{-t} + cosh x), from 1/4 d_{-2} + 1/2 d_0 + 1/4 d_2.
double burgmerger_u(double t, double x);
// -2 sinh x / (gamma + cosh x); the merger profile with gamma = e^{-t}.
double psi_gamma(double gamma, double x);
// Viscous Burgers shock c - delta tanh(delta y / 2) joining beta (left) to alpha.
double burgers_shock(double alpha, double beta, double y);

double cole_hopf(const LogReal& U, const LogReal& U_x);

// Appell transform V(tau, xi) = K(tau, xi) U(-1/tau, -xi/tau) for tau > 0.
LogReal appell_V(const EntireSolution& sol, double tau, double xi);
// |V_tau - V_xi,xi| at (tau, xi) = (-1/t, x/t) for t < 0, by five-point
// finite differences with step h.
double appell_residual(const EntireSolution& sol, double t, double x, double h = 1e-3);

// Heat-equation solution int K(t, x - z) dmu(z), t > 0.
LogReal poisson_eval(const Measure& mu, double t, double x, const QuadratureConfig& config = {});

struct TxGridSpec {
    double t0 = 0.0, t1 = 0.0;
    double x0 = 0.0, x1 = 0.0;
    int nt = 1, nx = 1;

    double t(int i) const { return nt == 1 ? t0 : t0 + (t1 - t0) * i / (nt - 1); }
    double x(int j) const { return nx == 1 ? x0 : x0 + (x1 - x0) * j / (nx - 1); }
};

struct TxSample {
    double t, x, u;
};

// Row-major in t, then x. Rows are spread over worker threads.
std::vector<TxSample> evaluate_grid(const std::function<double(double, double)>& field,
                                    const TxGridSpec& spec);

// x in [lo, hi] where field(x) crosses `level`; the bracket must straddle it.
double level_crossing(const std::function<double(double)>& field, double level, double lo, double hi);

} // namespace shockscope
