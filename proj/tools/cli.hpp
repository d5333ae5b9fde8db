#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heps::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kOutputError = 3,
  kGridParseError = 4,
};

/// Runs the command line `args` (without the program name). JSON documents go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heps::cli
