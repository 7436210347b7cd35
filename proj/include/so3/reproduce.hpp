#pragma once

// Golden pipelines for the worked examples: each check compares a computed
// value with a stored expectation.

#include <string>
#include <vector>

namespace so3 {

struct ReproductionCheck
{
    std::string name;
    std::string expected;
    std::string actual;
    bool ok() const { return expected == actual; }
};

struct ReproductionReport
{
    std::string target;
    std::vector<ReproductionCheck> checks;
    bool ok() const;
};

std::vector<std::string> reproduction_targets();

// Throws std::invalid_argument for unknown targets.
ReproductionReport reproduce(const std::string& target);

}  // namespace so3
