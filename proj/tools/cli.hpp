#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relgb::cli {

// Runs one command line (without the program name). Returns 0 on success,
// 1 on input errors and 2 on contract violations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace relgb::cli
