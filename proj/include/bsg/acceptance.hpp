#pragma once

// The acceptance suite: eleven numbered criteria, each printing one PASS/FAIL
// line with its measured quantities and pinned tolerances.  Shared by the
// standalone gate binary and the `verify` CLI subcommand.

#include <iosfwd>
#include <string>
#include <vector>

namespace bsg {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

std::vector<CriterionResult> run_acceptance_criteria();

// Prints one line per criterion; returns the number of failures.
int run_acceptance(std::ostream& os);

} // namespace bsg
