#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace univoque::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInputError = 2,
  kUnsupported = 3,
};

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace univoque::cli
