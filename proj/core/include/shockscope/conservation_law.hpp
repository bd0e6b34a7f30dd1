#pragma once

#include <memory>
#include <vector>

namespace shockscope {

// Convex flux for u_t + f(u)_x = u_xx: a polynomial in u, or the builtin
// Burgers flux u^2/2.
class Flux {
public:
    enum class Kind { Burgers, Polynomial };

    static Flux burgers();
    static Flux polynomial(std::vector<double> coeffs);  // f(u) = sum c_k u^k

    Kind kind() const { return kind_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    double f(double u) const;
    double df(double u) const;
    double d2f(double u) const;

    // min f'' on [lo, hi]: 256 samples, then Brent refinement around
    // the smallest. Throws if the flux is not uniformly convex there.
    double convexity(double lo, double hi) const;
    // max |f'| on [lo, hi] (f' is monotone for convex f).
    double max_speed(double lo, double hi) const;
    // Minimiser of f on [lo, hi].
    double sonic_point(double lo, double hi) const;

private:
    Kind kind_ = Kind::Burgers;
    std::vector<double> coeffs_;
    std::vector<double> d1_, d2_;
};

struct RankineHugoniot {
    double c;  // shock speed
    double d;  // f(beta) - c beta = f(alpha) - c alpha
};

// Left state beta > right state alpha.
RankineHugoniot rankine_hugoniot(const Flux& flux, double alpha, double beta);

// Travelling wave phi' = f(phi) - c phi - d with phi(0) = (alpha + beta)/2,
// phi -> beta as y -> -inf and alpha as y -> +inf. Tabulated by a
// Runge-Kutta-Fehlberg 7(8) integration in both directions until the limit
// is reached to 1e-14 (capped at |y| <= 200/lambda), interpolated by quintic
// Hermite splines.
class ShockProfile {
public:
    ShockProfile(const Flux& flux, double alpha, double beta);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double speed() const { return c_; }
    double d() const { return d_; }
    // Decay rates: |phi - alpha| ~ e^{-lambda_plus y}, |phi - beta| ~ e^{lambda_minus y}.
    double lambda_plus() const { return lambda_plus_; }
    double lambda_minus() const { return lambda_minus_; }
    double y_min() const;
    double y_max() const;

    double operator()(double y) const;
    double derivative(double y) const;
    // phi' - (f(phi) - c phi - d) from the interpolant.
    double ode_residual(double y) const;

private:
    struct Table;
    Flux flux_;
    double alpha_, beta_, c_, d_, lambda_plus_, lambda_minus_;
    std::shared_ptr<const Table> table_;
};

// Right-hand side of the one-sided Lipschitz bound u_x <= 1/(k t).
double oleinik_rhs(double k, double t);
double oleinik_rhs(const Flux& flux, double lo, double hi, double t);

} // namespace shockscope
