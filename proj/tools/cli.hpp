#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bipsym {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitOutOfScope = 3,
  kExitNotRealizable = 4,
  kExitVerifyFailed = 5,
  kExitPlacementFailure = 6,
};

// args[0] is the program name. Output goes to `out`, diagnostics to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace bipsym
