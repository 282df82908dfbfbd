#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclebuy::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kViolation = 2 };

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclebuy::cli
