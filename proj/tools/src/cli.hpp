#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kContract = 2,
  kResource = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsg::cli
