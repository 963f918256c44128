#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddisc {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitMLDegree = 3,
  kExitResourceLimit = 4,
  kExitUnlucky = 5,
  kExitNotShapePosition = 6,
};

/// Runs the tool with `args` (program name excluded). Results go to `out`
/// unless --output is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ddisc
