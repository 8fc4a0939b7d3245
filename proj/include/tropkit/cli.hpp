#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropkit {

/// Exit codes of `run`.
enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2, kBudget = 3 };

/// Entry point of the command line tool. `args` excludes the program name.
/// FILE arguments equal to "-" read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace tropkit
