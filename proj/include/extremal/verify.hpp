#pragma once

#include <string>
#include <vector>

namespace extremal {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0;
    double limit_ms = 0;
};

// Runs the toolkit's acceptance checks (all twelve, or those whose name
// contains `filter`). Each result carries its wall time and the budget the
// check must stay under; `pass` requires both the math and the budget.
std::vector<CriterionResult> run_acceptance(const std::string& filter = "");

}  // namespace extremal
