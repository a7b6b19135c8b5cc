#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loopbraid::cli {

/// Exit statuses shared by every verb.
enum ExitCode : int {
  kOk = 0,
  kDifferent = 1,     // `equal`: words differ
  kUsage = 2,         // bad flags, parse errors, invalid input
  kInconclusive = 3,  // `search`: no path within budget
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loopbraid::cli
