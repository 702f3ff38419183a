#pragma once

#include <string>
#include <vector>

namespace longmem {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int acceptance_criteria = 13;

// Runs one acceptance criterion (1..13). Exceptions inside a criterion are reported as failures.
CriterionResult run_criterion(int id);

// Runs the given criteria (all when empty) in order.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});

}  // namespace longmem
