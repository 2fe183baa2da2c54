#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cobsec::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // a boolean verdict came out false (obstructed, verification failed)
  kUsage = 2,     // usage, parse or precondition error
};

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cobsec::cli
