#pragma once

#include "shockscope/log_real.hpp"

namespace shockscope {

// libm erfc below x = 25; above it the asymptotic series in log form.
LogReal log_erfc(double x);
double erfc(double x);

// erfc(a) - erfc(b) for a <= b, without cancellation. Close arguments are
// integrated directly: (2/sqrt(pi)) * int_a^b exp(-s^2) ds.
LogReal erfc_difference(double a, double b);

// E(x) = int_0^x exp(-y^2) dy.
double err_E(double x);

// D(x) = exp(-x^2) int_0^x exp(y^2) dy.
double dawson(double x);

// Heat kernel exp(-x^2/4t)/sqrt(4 pi t), t > 0.
double heat_kernel(double t, double x);
LogReal log_heat_kernel(double t, double x);

} // namespace shockscope
