#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace powersum {

/// Runs the command line (without the program name) and returns the exit
/// status: 0 solvable or success, 1 insoluble, 2 unknown, 3 budget exceeded,
/// 4 usage error. verify-examples returns 0 iff every selected case passes
/// and 1 otherwise.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace powersum
