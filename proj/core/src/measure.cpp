#include "shockscope/measure.hpp"

#include "shockscope/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace shockscope {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kPositivitySamples = 64;
constexpr double kPositivitySlack = -1e-12;

void validate_piece(const DensityPiece& p) {
    if (!std::isfinite(p.a) || !std::isfinite(p.b) || !(p.a < p.b))
        throw InputError("density piece needs finite a < b, got [" + std::to_string(p.a) + ", " +
                         std::to_string(p.b) + "]");
    if (p.coeffs.empty()) throw InputError("density piece has no coefficients");
    for (double c : p.coeffs)
        if (!std::isfinite(c)) throw InputError("density piece has a non-finite coefficient");
    if (!std::isfinite(p.exp_rate) || !std::isfinite(p.exp_quad))
        throw InputError("density piece has a non-finite exponential weight");

    // Chebyshev points of the first kind plus both endpoints.
    auto check = [&](double z) {
        if (p.polynomial(z) < kPositivitySlack)
            throw InputError("density is negative at z = " + std::to_string(z));
    };
    check(p.a);
    check(p.b);
    const double mid = 0.5 * (p.a + p.b), half = 0.5 * (p.b - p.a);
    for (int j = 0; j < kPositivitySamples; ++j)
        check(mid + half * std::cos(std::numbers::pi * (j + 0.5) / kPositivitySamples));
}

// Coefficients of p(z - c) given those of p(z) (repeated synthetic division).
std::vector<double> taylor_shift(std::vector<double> c, double shift) {
    const auto n = c.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j > k; --j) c[j - 1] -= shift * c[j];
    return c;
}

} // namespace

double DensityPiece::polynomial(double z) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double DensityPiece::operator()(double z) const {
    if (z < a || z > b) return 0.0;
    return polynomial(z) * std::exp(exp_rate * z + exp_quad * z * z);
}

Measure::Measure(std::vector<Atom> atoms, std::vector<DensityPiece> pieces)
    : atoms_(std::move(atoms)), pieces_(std::move(pieces)) {
    for (const auto& at : atoms_) {
        if (!std::isfinite(at.z)) throw InputError("atom location must be finite");
        if (!(at.weight > 0.0) || !std::isfinite(at.weight))
            throw InputError("atom weight must be positive and finite, got " + std::to_string(at.weight));
    }
    for (const auto& p : pieces_) validate_piece(p);
    std::sort(atoms_.begin(), atoms_.end(), [](const Atom& l, const Atom& r) { return l.z < r.z; });
    std::sort(pieces_.begin(), pieces_.end(),
              [](const DensityPiece& l, const DensityPiece& r) { return l.a < r.a; });
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        if (pieces_[i].a < pieces_[i - 1].b) throw InputError("density pieces overlap");
}

Measure Measure::dirac(double z, double weight) { return Measure({{z, weight}}, {}); }

Measure Measure::uniform(double a, double b, double density) {
    return Measure({}, {DensityPiece{a, b, {density}, 0.0, 0.0}});
}

Measure operator+(const Measure& lhs, const Measure& rhs) {
    auto atoms = lhs.atoms_;
    auto pieces = lhs.pieces_;
    // Atoms at the same location merge.
    for (const auto& at : rhs.atoms_) {
        auto it = std::find_if(atoms.begin(), atoms.end(), [&](const Atom& x) { return x.z == at.z; });
        if (it != atoms.end())
            it->weight += at.weight;
        else
            atoms.push_back(at);
    }
    pieces.insert(pieces.end(), rhs.pieces_.begin(), rhs.pieces_.end());
    return Measure(std::move(atoms), std::move(pieces));
}

Support support(const Measure& mu) {
    if (mu.empty()) throw InputError("zero measure has no support");
    double lo = kInf, hi = -kInf;
    for (const auto& at : mu.atoms()) {
        lo = std::min(lo, at.z);
        hi = std::max(hi, at.z);
    }
    for (const auto& p : mu.pieces()) {
        lo = std::min(lo, p.a);
        hi = std::max(hi, p.b);
    }
    return {lo, hi};
}

bool in_support(const Measure& mu, double c) {
    for (const auto& at : mu.atoms())
        if (at.z == c) return true;
    for (const auto& p : mu.pieces())
        if (p.a <= c && c <= p.b) return true;
    return false;
}

SupportGap support_gap(const Measure& mu, double c) {
    if (mu.empty()) throw InputError("zero measure has no support");
    if (in_support(mu, c)) throw InputError("speed " + std::to_string(c) + " lies in the support");
    SupportGap g{-kInf, kInf};
    for (const auto& at : mu.atoms()) {
        if (at.z < c) g.below = std::max(g.below, at.z);
        if (at.z > c) g.above = std::min(g.above, at.z);
    }
    for (const auto& p : mu.pieces()) {
        if (p.b < c) g.below = std::max(g.below, p.b);
        if (p.a > c) g.above = std::min(g.above, p.a);
    }
    return g;
}

double total_mass(const Measure& mu) {
    if (mu.empty()) return 0.0;
    return gaussian_moments(mu, 0.0, 0.0, 0.0, 0)[0].to_double();
}

Measure scale_weights(const Measure& mu, double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor)) throw InputError("weight factor must be positive");
    auto atoms = mu.atoms();
    auto pieces = mu.pieces();
    for (auto& at : atoms) at.weight *= factor;
    for (auto& p : pieces)
        for (auto& c : p.coeffs) c *= factor;
    return Measure(std::move(atoms), std::move(pieces));
}

Measure normalize(const Measure& mu) {
    const double mass = total_mass(mu);
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw InputError("measure mass must be positive and finite to normalize");
    return scale_weights(mu, 1.0 / mass);
}

Measure restrict_to(const Measure& mu, double lo, double hi) {
    std::vector<Atom> atoms;
    std::vector<DensityPiece> pieces;
    for (const auto& at : mu.atoms())
        if (lo <= at.z && at.z <= hi) atoms.push_back(at);
    for (auto p : mu.pieces()) {
        p.a = std::max(p.a, lo);
        p.b = std::min(p.b, hi);
        if (p.a < p.b) pieces.push_back(std::move(p));
    }
    return Measure(std::move(atoms), std::move(pieces));
}

Measure act_translate(const Measure& mu, double x0) {
    auto atoms = mu.atoms();
    auto pieces = mu.pieces();
    for (auto& at : atoms) at.weight *= std::exp(0.5 * at.z * x0);
    for (auto& p : pieces) p.exp_rate += 0.5 * x0;
    return Measure(std::move(atoms), std::move(pieces));
}

Measure act_timeshift(const Measure& mu, double t0) {
    auto atoms = mu.atoms();
    auto pieces = mu.pieces();
    for (auto& at : atoms) at.weight *= std::exp(0.25 * at.z * at.z * t0);
    for (auto& p : pieces) p.exp_quad += 0.25 * t0;
    return Measure(std::move(atoms), std::move(pieces));
}

Measure act_galilean(const Measure& mu, double c) {
    auto atoms = mu.atoms();
    auto pieces = mu.pieces();
    for (auto& at : atoms) at.z += c;
    for (auto& p : pieces) {
        // p(z-c) exp(q (z-c)^2 + r (z-c)) = p(z-c) e^{q c^2 - r c} exp(q z^2 + (r - 2 q c) z)
        const double factor = std::exp(p.exp_quad * c * c - p.exp_rate * c);
        p.coeffs = taylor_shift(p.coeffs, c);
        for (auto& k : p.coeffs) k *= factor;
        p.exp_rate -= 2.0 * p.exp_quad * c;
        p.a += c;
        p.b += c;
    }
    return Measure(std::move(atoms), std::move(pieces));
}

Measure act_scale(const Measure& mu, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InputError("scale factor must be positive");
    auto atoms = mu.atoms();
    auto pieces = mu.pieces();
    for (auto& at : atoms) at.z *= lambda;
    for (auto& p : pieces) {
        // Push-forward density: rho(z / lambda) / lambda.
        double f = 1.0 / lambda;
        for (auto& k : p.coeffs) {
            k *= f;
            f /= lambda;
        }
        p.exp_rate /= lambda;
        p.exp_quad /= lambda * lambda;
        p.a *= lambda;
        p.b *= lambda;
    }
    return Measure(std::move(atoms), std::move(pieces));
}

Measure reflect(const Measure& mu) {
    auto atoms = mu.atoms();
    auto pieces = mu.pieces();
    for (auto& at : atoms) at.z = -at.z;
    for (auto& p : pieces) {
        for (std::size_t k = 1; k < p.coeffs.size(); k += 2) p.coeffs[k] = -p.coeffs[k];
        p.exp_rate = -p.exp_rate;
        std::swap(p.a, p.b);
        p.a = -p.a;
        p.b = -p.b;
    }
    return Measure(std::move(atoms), std::move(pieces));
}

} // namespace shockscope
