#pragma once

// The end-to-end acceptance criteria, shared by the acceptance test binary
// and the `suite` command.

#include <string>
#include <vector>

namespace z2z4 {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double elapsed_ms = 0.0;
    double limit_ms = 0.0;  ///< 0 when the criterion has no runtime bound
};

/// Runs every criterion in order. `workers` is used for the parallel half of
/// the uniqueness-search determinism check.
std::vector<CriterionResult> run_acceptance(unsigned workers = 4);

/// "[PASS] 1 name (123.4 ms): detail"
std::string format_result(const CriterionResult& r);

}  // namespace z2z4
