#pragma once

#include <string>
#include <vector>

namespace slq {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    std::vector<std::string> details;  // one line per sub-check
};

// Runs the built-in verification suite: every check carries its exact
// expected value; there are no tolerances anywhere.
std::vector<CriterionResult> run_acceptance();

}  // namespace slq
