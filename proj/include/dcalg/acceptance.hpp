#pragma once

#include <string>
#include <vector>

namespace dcalg {

struct CriterionResult {
    std::string id;
    bool pass = true;
    std::vector<std::string> lines;  // one line per verified statement
};

std::vector<std::string> acceptance_ids();

// quick = trimmed ranges for smoke runs; the full suite is the release gate
CriterionResult run_acceptance_criterion(const std::string& id, bool quick = false,
                                         int threads = 1);

// Runs every criterion (or the quick subset) and streams one pass/fail line
// per criterion to stdout; returns the number of failures.
int run_acceptance_suite(bool quick = false, int threads = 1);

}  // namespace dcalg
