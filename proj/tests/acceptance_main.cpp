#include "dcalg/acceptance.hpp"

#include <cstring>
#include <iostream>

// Runs one acceptance criterion (or all of them) and prints one pass/fail
// line per criterion, with the individual verified statements indented.
int main(int argc, char** argv) {
    using namespace dcalg;
    bool quick = false;
    std::vector<std::string> ids;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0)
            quick = true;
        else
            ids.emplace_back(argv[i]);
    }
    if (ids.empty()) ids = acceptance_ids();

    int failures = 0;
    for (const auto& id : ids) {
        CriterionResult r = run_acceptance_criterion(id, quick);
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << "\n";
        for (const auto& line : r.lines) std::cout << line << "\n";
        if (!r.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
