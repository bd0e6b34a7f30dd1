#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace shockscope {

// A real number stored as sign and log of magnitude. Zero has sign 0 and
// log_abs = -inf. Products never overflow; sums go through log_sum.
class LogReal {
public:
    constexpr LogReal() = default;
    explicit LogReal(double value);

    static LogReal from_log(double log_abs, int sign = 1);
    static LogReal zero() { return {}; }

    int sign() const { return sign_; }
    double log_abs() const { return log_abs_; }
    bool is_zero() const { return sign_ == 0; }

    // Overflows to +-inf and underflows to 0 like exp() does.
    double to_double() const;

    LogReal operator-() const;
    LogReal& operator*=(const LogReal& rhs);
    LogReal& operator/=(const LogReal& rhs);
    LogReal& operator+=(const LogReal& rhs);
    LogReal& operator-=(const LogReal& rhs);

    friend LogReal operator*(LogReal a, const LogReal& b) { return a *= b; }
    friend LogReal operator/(LogReal a, const LogReal& b) { return a /= b; }
    friend LogReal operator+(LogReal a, const LogReal& b) { return a += b; }
    friend LogReal operator-(LogReal a, const LogReal& b) { return a -= b; }

private:
    int sign_ = 0;
    double log_abs_ = -std::numeric_limits<double>::infinity();
};

// Sum in the log domain: the largest magnitude is factored out and terms are
// accumulated in descending order. A result whose magnitude falls below
// 1e-15 of the largest term is treated as exact cancellation (sign 0).
LogReal log_sum(std::span<const LogReal> terms);

// Ratio a/b as an ordinary double.
double ratio(const LogReal& a, const LogReal& b);

} // namespace shockscope
