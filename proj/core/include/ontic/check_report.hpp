#pragma once

#include <string>
#include <utility>

namespace ontic {

// Verdict of one statistical condition: the condition named in `condition`
// holds on the model up to `deviation`, which is compared against
// `tolerance`. `passed` is always `deviation <= tolerance`.
struct CheckReport {
    std::string name;       // short identifier, e.g. "free choice"
    std::string condition;  // the condition checked, e.g. "P(A | Lambda, Psi) = P(A)"
    double deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;     // optional extra context

    CheckReport() = default;

    CheckReport(std::string name_, std::string condition_, double deviation_,
                double tolerance_, std::string detail_ = "")
        : name(std::move(name_)),
          condition(std::move(condition_)),
          deviation(deviation_),
          tolerance(tolerance_),
          passed(deviation_ <= tolerance_),
          detail(std::move(detail_)) {}
};

}  // namespace ontic
