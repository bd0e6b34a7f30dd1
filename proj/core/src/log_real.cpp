#include "shockscope/log_real.hpp"

#include <algorithm>
#include <vector>

namespace shockscope {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kCancel = 1e-15;
} // namespace

LogReal::LogReal(double value) {
    if (value != 0.0 && !std::isnan(value)) {
        sign_ = value > 0 ? 1 : -1;
        log_abs_ = std::log(std::fabs(value));
    } else if (std::isnan(value)) {
        sign_ = 1;
        log_abs_ = value;
    }
}

LogReal LogReal::from_log(double log_abs, int sign) {
    LogReal r;
    if (sign == 0 || log_abs == kNegInf) return r;
    r.sign_ = sign > 0 ? 1 : -1;
    r.log_abs_ = log_abs;
    return r;
}

double LogReal::to_double() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::exp(log_abs_);
}

LogReal LogReal::operator-() const {
    LogReal r = *this;
    r.sign_ = -r.sign_;
    return r;
}

LogReal& LogReal::operator*=(const LogReal& rhs) {
    if (sign_ == 0 || rhs.sign_ == 0) return *this = LogReal{};
    sign_ *= rhs.sign_;
    log_abs_ += rhs.log_abs_;
    return *this;
}

LogReal& LogReal::operator/=(const LogReal& rhs) {
    if (rhs.sign_ == 0) {
        // Division by zero follows IEEE: inf with the numerator's sign, NaN for 0/0.
        if (sign_ == 0) return *this = LogReal(std::nan(""));
        log_abs_ = std::numeric_limits<double>::infinity();
        return *this;
    }
    if (sign_ == 0) return *this;
    sign_ *= rhs.sign_;
    log_abs_ -= rhs.log_abs_;
    return *this;
}

LogReal& LogReal::operator+=(const LogReal& rhs) {
    const LogReal terms[2] = {*this, rhs};
    return *this = log_sum(terms);
}

LogReal& LogReal::operator-=(const LogReal& rhs) { return *this += -rhs; }

LogReal log_sum(std::span<const LogReal> terms) {
    std::vector<LogReal> sorted;
    sorted.reserve(terms.size());
    for (const auto& t : terms)
        if (!t.is_zero()) sorted.push_back(t);
    if (sorted.empty()) return {};
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const LogReal& a, const LogReal& b) { return a.log_abs() > b.log_abs(); });
    const double top = sorted.front().log_abs();
    if (std::isinf(top)) {
        // Infinite magnitudes: the sum is only defined if all infinities agree in sign.
        int s = 0;
        for (const auto& t : sorted) {
            if (!std::isinf(t.log_abs())) break;
            if (s != 0 && s != t.sign()) return LogReal(std::nan(""));
            s = t.sign();
        }
        return LogReal::from_log(top, s);
    }
    if (std::isnan(top)) return LogReal(std::nan(""));

    // Neumaier compensated summation of the scaled terms.
    double sum = 0.0, comp = 0.0;
    for (const auto& t : sorted) {
        const double v = t.sign() * std::exp(t.log_abs() - top);
        const double s = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - s) + v;
        else
            comp += (v - s) + sum;
        sum = s;
    }
    sum += comp;
    if (std::fabs(sum) < kCancel) return {};
    return LogReal::from_log(top + std::log(std::fabs(sum)), sum > 0 ? 1 : -1);
}

double ratio(const LogReal& a, const LogReal& b) { return (a / b).to_double(); }

} // namespace shockscope
