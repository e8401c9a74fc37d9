#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latgon::cli {

// Runs the latgon command line. Exit codes: 0 success, 1 input error,
// 2 usage error, 3 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latgon::cli
