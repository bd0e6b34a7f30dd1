#pragma once

#include <functional>
#include <string>
#include <vector>

namespace shockscope {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double value = 0.0;      // measured quantity (worst case over the check)
    double threshold = 0.0;  // pass when value <= threshold unless noted in detail
    std::string detail;
    double seconds = 0.0;
};

constexpr int kCriterionCount = 14;

CheckResult run_criterion(int id);

// Runs every criterion in order; on_result is called as each one finishes.
std::vector<CheckResult> run_acceptance(const std::function<void(const CheckResult&)>& on_result = {});

std::string format_result(const CheckResult& r);

} // namespace shockscope
