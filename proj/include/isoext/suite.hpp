#pragma once

// The full verification matrix, shared by the `isoext suite` subcommand and
// the acceptance test binary. Each criterion prints one pass/fail line.

#include <iosfwd>
#include <string>
#include <vector>

namespace isoext {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    double seconds = 0;
    std::vector<std::string> notes;
};

std::vector<CriterionResult> run_acceptance(std::ostream& out);

// prints the per-criterion lines and a summary; returns 0 iff all passed
int run_acceptance_main(std::ostream& out);

}  // namespace isoext
