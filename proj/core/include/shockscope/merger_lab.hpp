#pragma once

#include "shockscope/log_real.hpp"

#include <vector>

namespace shockscope {

// Heat solution V_m with initial data cosh x on |x| <= m and cosh m outside:
//   V_m = Vhat(x) + Vhat(-x) + What(x) + What(-x),
//   Vhat(t,x) = cosh(m)/2 erfc((m + x)/(2 sqrt t)),
//   What(t,x) = e^{t+x}/4 [erfc((2t - m + x)/(2 sqrt t)) - erfc((2t + m + x)/(2 sqrt t))].
LogReal vm_eval(double m, double t, double x);
LogReal vm_dx_eval(double m, double t, double x);

// cosh m - V_m and e^t cosh x - V_m, and their x-derivatives, evaluated
// directly so that bounds on them are not lost to cancellation.
LogReal vm_deficit_far(double m, double t, double x);
LogReal vm_deficit_near(double m, double t, double x);
LogReal vm_deficit_near_dx(double m, double t, double x);

struct BoundCheck {
    bool lower_ok = false;
    bool upper_ok = false;
    bool dx_ok = false;
    bool all() const { return lower_ok && upper_ok && dx_ok; }
};

// cosh m (1 - m/sqrt(pi t)) <= V_m <= cosh m,  |V_m,x| <= m cosh m / (sqrt(4 pi) t).
BoundCheck check_long_bounds(double m, double t, double x);
// For |x| + 2t <= m/2:
//   e^t cosh x (1 - e^{-m^2/16t}) <= V_m <= e^t cosh x,
//   |V_m,x - e^t sinh x| <= e^{-m^2/16t} e^t cosh x.
BoundCheck check_short_bounds(double m, double t, double x);

// Leading term of V_m(m/delta, x) for 0 < delta < 2:
//   (1/sqrt(pi m delta)) (2/(2 - delta)) e^{m(1 - delta/4)} cosh(delta x/2).
LogReal inter_asymptotic(double m, double delta, double x);

// Times t_1 < ... < t_J with t_{j+1} >= N^2 t_j^2, N >= 10, t_1 >= 1.
class MergerSchedule {
public:
    MergerSchedule(double N, std::vector<double> times);
    static MergerSchedule standard();  // N = 10, times (1, 200, 1e9)

    double N() const { return N_; }
    const std::vector<double>& times() const { return times_; }
    double t(int k) const;  // 1-based
    int size() const { return static_cast<int>(times_.size()); }
    // tau_k = t_k + (N - 1) t_{k-1}, k >= 2.
    double merge_time(int k) const;
    // N t_k / delta
    double repair_time(int k, double delta) const;

private:
    double N_;
    std::vector<double> times_;
};

// U = 1 + sum_j e^{-t_j} V_{N t_j},  u = -2 U_x / U.
class MergerSolution {
public:
    explicit MergerSolution(MergerSchedule schedule);

    const MergerSchedule& schedule() const { return schedule_; }
    LogReal U(double t, double x) const;
    LogReal U_x(double t, double x) const;
    double u(double t, double x) const;

private:
    MergerSchedule schedule_;
};

struct MergerDiagnostic {
    double time = 0.0;
    double sup_error = 0.0;
    double window = 0.0;
};

// sup over |x| <= window of |u(tau_k, x) + 2 sinh x / (1 + cosh x)|;
// window defaults to t_k.
MergerDiagnostic merger_diag(const MergerSolution& sol, int k, double window = 0.0, int points = 201);
// sup over |x| <= window of |u(N t_k/delta, x) + delta tanh(delta x/2)|.
MergerDiagnostic repair_diag(const MergerSolution& sol, int k, double delta, double window = 5.0, int points = 201);

} // namespace shockscope
