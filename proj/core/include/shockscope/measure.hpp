#pragma once

#include "shockscope/log_real.hpp"

#include <array>
#include <vector>

namespace shockscope {

struct Atom {
    double z = 0.0;
    double weight = 0.0;
};

// Density p(z) * exp(exp_rate * z + exp_quad * z^2) on [a, b], with p given
// by power-basis coefficients in z.
struct DensityPiece {
    double a = 0.0;
    double b = 0.0;
    std::vector<double> coeffs;
    double exp_rate = 0.0;
    double exp_quad = 0.0;

    double polynomial(double z) const;
    double operator()(double z) const;
};

// Finite, non-negative, compactly supported measure: atoms plus piecewise
// exponential-polynomial densities. Construction validates the pieces.
class Measure {
public:
    Measure() = default;
    Measure(std::vector<Atom> atoms, std::vector<DensityPiece> pieces);

    static Measure dirac(double z, double weight = 1.0);
    static Measure uniform(double a, double b, double density = 1.0);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<DensityPiece>& pieces() const { return pieces_; }
    bool empty() const { return atoms_.empty() && pieces_.empty(); }

    friend Measure operator+(const Measure& lhs, const Measure& rhs);

private:
    std::vector<Atom> atoms_;
    std::vector<DensityPiece> pieces_;
};

struct Support {
    double alpha;
    double beta;
};

// Convex hull of the support. Throws on the zero measure.
Support support(const Measure& mu);
bool in_support(const Measure& mu, double c);

// Nearest support points strictly below and above c (-inf / +inf when absent).
// Throws when c lies in the support.
struct SupportGap {
    double below;
    double above;
};
SupportGap support_gap(const Measure& mu, double c);

double total_mass(const Measure& mu);
Measure normalize(const Measure& mu);
Measure scale_weights(const Measure& mu, double factor);
Measure restrict_to(const Measure& mu, double lo, double hi);

// Symmetry actions. Each maps the solution u generated by mu to
//   translate:  u(t, x - x0)
//   timeshift:  u(t + t0, x)
//   galilean:   u(t, x - c t) + c
//   scale:      lambda u(lambda^2 t, lambda x)
//   reflect:    -u(t, -x)
Measure act_translate(const Measure& mu, double x0);
Measure act_timeshift(const Measure& mu, double t0);
Measure act_galilean(const Measure& mu, double c);
Measure act_scale(const Measure& mu, double lambda);
Measure reflect(const Measure& mu);

struct QuadratureConfig {
    double tolerance = 1e-12;
    int max_depth = 24;
};

// Moments int (z - center)^k exp(quad z^2 + lin z) dmu(z), k = 0..order
// (order <= 2), each as a signed log-magnitude. Entries above order are zero.
// The exponent maximum is factored out per piece and the integration
// interval is split geometrically around it.
std::array<LogReal, 3> gaussian_moments(const Measure& mu, double quad, double lin,
                                        double center = 0.0, int order = 2,
                                        const QuadratureConfig& config = {});

} // namespace shockscope
