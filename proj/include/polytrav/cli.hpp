#pragma once

#include <ostream>

namespace polytrav {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInputError = 2,
};

/// Entry point of the `polytrav` tool, with the streams injectable for tests.
/// Objects go to `out`, one per line; diagnostics and statistics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polytrav
