#pragma once

// Named verification checks behind `latgon verify-paper` and the acceptance
// suite. Each check compares a computed quantity against its expected value;
// the basis field records where the expectation comes from ("reference" for
// previously published values, "derived" for independently recomputed ones,
// "definition" for immediate consequences).

#include <map>
#include <set>
#include <string>
#include <vector>

#include "latgon/polygon.hpp"

namespace latgon {

struct CheckResult {
    std::string name;
    int criterion = 0;  // acceptance criterion the check belongs to (1..10)
    bool pass = false;
    std::string expected;
    std::string computed;
    std::string basis;
    double seconds = 0.0;
};

// All check names in execution order.
std::vector<std::string> verify_check_names();

// Runs the named checks (all when the selection is empty). Unknown names
// throw std::invalid_argument. Census results are shared across checks.
std::vector<CheckResult> run_verify_checks(const std::vector<std::string>& selection);

// Verification-only census oracle: direct subset search over a box x box
// grid; returns canonical vertex lists per lattice-point count.
std::map<Z, std::set<std::vector<Pt>>> brute_force_census(Z box, Z max_points);

}  // namespace latgon
