#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isingdos::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // validation or verification failure
  kUsage = 2,
  kIo = 3,
};

/// Runs one CLI invocation. `args` excludes the program name. Data goes to
/// `out`; diagnostics go to `err`, whose first line on failure is
/// `error: <check>: <message>`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isingdos::cli
