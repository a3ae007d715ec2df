#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace prufer {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitUsageError = 2,
};

/// Runs the `prufer` tool on args (without the program name). A path of "-"
/// reads from `in`. Returns the exit status.
int run_cli(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace prufer
