#include "shockscope/measure.hpp"

#include "shockscope/error.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace shockscope {

namespace {

using Rule = boost::math::quadrature::gauss<double, 32>;
using Triple = std::array<double, 3>;

// Exponent drop below the piece maximum beyond which the integrand is dropped.
constexpr double kCutoff = 800.0;

struct Integrand {
    const DensityPiece& piece;
    double Q, R, center, shift;
    int order;

    Triple operator()(double z) const {
        const double w = piece.polynomial(z) * std::exp(Q * z * z + R * z - shift);
        const double d = z - center;
        return {w, w * d, w * d * d};
    }
    double exponent(double z) const { return Q * z * z + R * z - shift; }
};

Triple gauss(const Integrand& f, double lo, double hi, bool absolute = false) {
    const auto& x = Rule::abscissa();
    const auto& w = Rule::weights();
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    Triple acc{};
    auto add = [&](double z, double weight) {
        const Triple v = f(z);
        for (int k = 0; k <= f.order; ++k) acc[k] += weight * (absolute ? std::fabs(v[k]) : v[k]);
    };
    // Boost stores the non-negative half of the symmetric rule; the first
    // abscissa is 0 for odd sizes only.
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0.0) {
            add(mid, w[i]);
        } else {
            add(mid - half * x[i], w[i]);
            add(mid + half * x[i], w[i]);
        }
    }
    for (auto& v : acc) v *= half;
    return acc;
}

Triple adaptive(const Integrand& f, double lo, double hi, const Triple& whole, const Triple& scale,
                double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const Triple left = gauss(f, lo, mid);
    const Triple right = gauss(f, mid, hi);
    Triple halves{};
    bool ok = true;
    for (int k = 0; k <= f.order; ++k) {
        halves[k] = left[k] + right[k];
        if (std::fabs(halves[k] - whole[k]) > tol * scale[k]) ok = false;
    }
    if (ok) return halves;
    if (depth <= 0) throw NumericalError("measure quadrature did not converge");
    const Triple l = adaptive(f, lo, mid, left, scale, tol, depth - 1);
    const Triple r = adaptive(f, mid, hi, right, scale, tol, depth - 1);
    Triple out{};
    for (int k = 0; k <= f.order; ++k) out[k] = l[k] + r[k];
    return out;
}

// Breakpoints on [lo, hi] where the exponent is monotone and peaks at `peak`
// (one of the endpoints): geometric spacing away from the peak, truncated
// once the exponent has dropped by kCutoff.
void monotone_breakpoints(const Integrand& f, double lo, double hi, bool peak_at_lo,
                          std::vector<double>& out) {
    const double len = hi - lo;
    const double peak = peak_at_lo ? lo : hi;
    const double slope = std::fabs(2.0 * f.Q * peak + f.R);
    double s = 1.0 / std::max({slope, std::sqrt(std::fabs(f.Q)), 1.0 / len});
    out.push_back(peak);
    for (double d = s; d < len; d *= 2.0) {
        const double z = peak_at_lo ? lo + d : hi - d;
        out.push_back(z);
        if (f.exponent(z) < -kCutoff) return;
    }
    out.push_back(peak_at_lo ? hi : lo);
}

std::array<LogReal, 3> piece_moments(const DensityPiece& p, double quad, double lin, double center,
                                     int order, const QuadratureConfig& cfg) {
    const double Q = quad + p.exp_quad, R = lin + p.exp_rate;
    auto G = [&](double z) { return Q * z * z + R * z; };

    // Split at the interior critical point, then locate the maximum.
    std::vector<double> cuts{p.a};
    double zc = std::numeric_limits<double>::quiet_NaN();
    if (Q != 0.0) {
        zc = -R / (2.0 * Q);
        if (zc > p.a && zc < p.b) cuts.push_back(zc);
    }
    cuts.push_back(p.b);
    double M = std::max(G(p.a), G(p.b));
    if (Q < 0.0 && zc > p.a && zc < p.b) M = G(zc);
    if (!std::isfinite(M)) throw NumericalError("exponent overflow in measure quadrature");

    Integrand f{p, Q, R, center, M, order};
    std::vector<double> bps;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        std::vector<double> local;
        monotone_breakpoints(f, lo, hi, G(lo) >= G(hi), local);
        std::sort(local.begin(), local.end());
        bps.insert(bps.end(), local.begin(), local.end());
    }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    // First pass: plain rule per panel, and a magnitude scale for the tolerance.
    std::vector<Triple> panels(bps.size() - 1);
    Triple scale{};
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        panels[i] = gauss(f, bps[i], bps[i + 1]);
        const Triple mag = gauss(f, bps[i], bps[i + 1], true);
        for (int k = 0; k <= order; ++k) scale[k] += mag[k];
    }
    for (int k = 0; k <= order; ++k)
        if (scale[k] == 0.0) scale[k] = std::numeric_limits<double>::min();

    Triple total{};
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const Triple v = adaptive(f, bps[i], bps[i + 1], panels[i], scale, cfg.tolerance, cfg.max_depth);
        for (int k = 0; k <= order; ++k) total[k] += v[k];
    }
    std::array<LogReal, 3> out{};
    for (int k = 0; k <= order; ++k) {
        LogReal v(total[k]);
        out[k] = v.is_zero() ? v : LogReal::from_log(v.log_abs() + M, v.sign());
    }
    return out;
}

} // namespace

std::array<LogReal, 3> gaussian_moments(const Measure& mu, double quad, double lin, double center,
                                        int order, const QuadratureConfig& config) {
    if (order < 0 || order > 2) throw InputError("moment order must be 0, 1 or 2");
    std::array<std::vector<LogReal>, 3> terms;
    for (const auto& at : mu.atoms()) {
        const double e = quad * at.z * at.z + lin * at.z + std::log(at.weight);
        LogReal base = LogReal::from_log(e);
        const double d = at.z - center;
        terms[0].push_back(base);
        if (order >= 1) terms[1].push_back(base * LogReal(d));
        if (order >= 2) terms[2].push_back(base * LogReal(d * d));
    }
    for (const auto& p : mu.pieces()) {
        const auto m = piece_moments(p, quad, lin, center, order, config);
        for (int k = 0; k <= order; ++k) terms[k].push_back(m[k]);
    }
    std::array<LogReal, 3> out{};
    for (int k = 0; k <= order; ++k) out[k] = log_sum(terms[k]);
    return out;
}

} // namespace shockscope
