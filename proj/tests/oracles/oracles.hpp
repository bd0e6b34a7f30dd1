#pragma once

// Reference values computed independently of the library: plain adaptive
// Simpson in long double on explicitly bounded intervals.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using Fn = std::function<long double(long double)>;

namespace detail {

inline long double simpson(const Fn& f, long double a, long double fa, long double b, long double fb,
                           long double m, long double fm, long double whole, long double tol, int depth) {
    const long double lm = 0.5L * (a + m), rm = 0.5L * (m + b);
    const long double flm = f(lm), frm = f(rm);
    const long double left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
    const long double right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
    const long double diff = left + right - whole;
    if (depth <= 0 || std::fabs(diff) <= 15.0L * tol) return left + right + diff / 15.0L;
    return simpson(f, a, fa, m, fm, lm, flm, left, 0.5L * tol, depth - 1) +
           simpson(f, m, fm, b, fb, rm, frm, right, 0.5L * tol, depth - 1);
}

} // namespace detail

// int_a^b f to relative tolerance `tol`, the interval first cut into
// `pieces` equal panels.
inline long double integrate(const Fn& f, long double a, long double b, long double tol = 1e-15L, int pieces = 64) {
    const long double h = (b - a) / pieces;
    std::vector<long double> fl(pieces), fh(pieces), fm(pieces), whole(pieces);
    long double crude = 0.0L;
    for (int i = 0; i < pieces; ++i) {
        const long double lo = a + h * i, hi = (i + 1 == pieces) ? b : a + h * (i + 1);
        fl[i] = f(lo);
        fh[i] = f(hi);
        fm[i] = f(0.5L * (lo + hi));
        whole[i] = (hi - lo) / 6.0L * (fl[i] + 4.0L * fm[i] + fh[i]);
        crude += std::fabs(whole[i]);
    }
    const long double abs_tol = std::max(tol * crude, 1e-300L) / pieces;
    long double total = 0.0L;
    for (int i = 0; i < pieces; ++i) {
        const long double lo = a + h * i, hi = (i + 1 == pieces) ? b : a + h * (i + 1);
        total += detail::simpson(f, lo, fl[i], hi, fh[i], 0.5L * (lo + hi), fm[i], whole[i], abs_tol, 30);
    }
    return total;
}

// Piecewise integral with breakpoints (sorted, may include a and b).
inline long double integrate_split(const Fn& f, std::vector<long double> cuts, long double tol = 1e-15L) {
    long double total = 0.0L;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i + 1] > cuts[i]) total += integrate(f, cuts[i], cuts[i + 1], tol);
    return total;
}

inline long double heat_kernel(long double t, long double x) {
    return std::exp(-x * x / (4.0L * t)) / std::sqrt(4.0L * std::numbers::pi_v<long double> * t);
}

// int K(t, x - y) g(y) dy over |y - x| <= 40 sqrt(t), split at the kinks of g.
inline long double heat_convolve(const Fn& g, long double t, long double x, std::vector<long double> kinks = {}) {
    const long double R = 40.0L * std::sqrt(t);
    std::vector<long double> cuts{x - R};
    for (long double k : kinks)
        if (k > x - R && k < x + R) cuts.push_back(k);
    cuts.push_back(x + R);
    std::sort(cuts.begin(), cuts.end());
    return integrate_split([&](long double y) { return heat_kernel(t, x - y) * g(y); }, cuts, 1e-16L);
}

// V_m by direct convolution of its initial data, and of the data's derivative.
inline long double vm(long double m, long double t, long double x) {
    return heat_convolve([m](long double y) { return std::fabs(y) <= m ? std::cosh(y) : std::cosh(m); }, t, x,
                         {-m, m});
}
// The derivative data jumps at +-m and vanishes outside, so integrate over
// [-m, m] only; evaluating it at the cut from outside would pick up sinh(m).
inline long double vm_dx(long double m, long double t, long double x) {
    const long double R = 40.0L * std::sqrt(t);
    const long double lo = std::max(-m, x - R), hi = std::min(m, x + R);
    if (hi <= lo) return 0.0L;
    std::vector<long double> cuts{lo, hi};
    if (x > lo && x < hi) cuts.insert(cuts.begin() + 1, x);
    return integrate_split([&](long double y) { return heat_kernel(t, x - y) * std::sinh(y); }, cuts, 1e-16L);
}

inline long double err_E(long double x) {
    return integrate([](long double y) { return std::exp(-y * y); }, 0.0L, x, 1e-16L);
}

inline long double dawson(long double x) {
    // e^{-x^2} int_0^x e^{y^2} dy = int_0^x e^{(y - x)(y + x)} dy
    return integrate([x](long double y) { return std::exp((y - x) * (y + x)); }, 0.0L, x, 1e-16L);
}

// u = <z> under exp(-z x/2 + z^2 t/4) (density(z) dz on [a, b] + atoms).
struct Atom {
    long double z, w;
};
struct Density {
    long double a, b;
    Fn p;
};
inline long double entire_u(const std::vector<Atom>& atoms, const std::vector<Density>& pieces, long double t,
                            long double x) {
    // Normalise by the largest exponent over the support to keep sums finite.
    auto expo = [&](long double z) { return -z * x / 2.0L + z * z * t / 4.0L; };
    long double top = -INFINITY;
    for (const auto& at : atoms) top = std::max(top, expo(at.z));
    for (const auto& pc : pieces) {
        for (int i = 0; i <= 4000; ++i) top = std::max(top, expo(pc.a + (pc.b - pc.a) * i / 4000.0L));
    }
    long double m0 = 0.0L, m1 = 0.0L;
    for (const auto& at : atoms) {
        const long double w = at.w * std::exp(expo(at.z) - top);
        m0 += w;
        m1 += w * at.z;
    }
    for (const auto& pc : pieces) {
        m0 += integrate([&](long double z) { return pc.p(z) * std::exp(expo(z) - top); }, pc.a, pc.b, 1e-16L, 256);
        m1 += integrate([&](long double z) { return z * pc.p(z) * std::exp(expo(z) - top); }, pc.a, pc.b, 1e-16L,
                        256);
    }
    return m1 / m0;
}

} // namespace oracle
