#pragma once

#include <iosfwd>

namespace covgerm {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitNoConvergence = 3 };

/// Runs one subcommand; JSON goes to out, human-readable logs to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace covgerm
