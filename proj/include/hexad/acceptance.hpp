#pragma once

#include <string>
#include <vector>

#include "hexad/catalog.hpp"

namespace hexad {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = true;
    std::vector<std::string> failures;
    double seconds = 0.0;
};

/// The release gate: every check runs at zero tolerance (exact arithmetic
/// throughout). Returns one result per criterion.
std::vector<CriterionResult> run_acceptance(const Catalog& catalog, unsigned long seed = 0);

/// Print one pass/fail line per criterion; returns the number of failures.
int report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace hexad
