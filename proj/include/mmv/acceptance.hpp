#ifndef MMV_ACCEPTANCE_HPP
#define MMV_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mmv {

struct CriterionResult {
    int number;
    std::string title;
    bool pass;
    std::string detail;
};

// Runs the full verification suite (one line per criterion on out).
// base_digits below 50 is raised to 50; the per-criterion tolerances are
// fixed in code.
std::vector<CriterionResult> run_acceptance(std::ostream& out, int base_digits = 50);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace mmv

#endif
