#pragma once

#include <iosfwd>

namespace bfc {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitParse = 2,
  kExitCap = 3,
  kExitPartial = 4,
  kExitVerdictFailed = 5,
};

/// Runs one command (argv[0] is the program name). Results go to `out` unless
/// --out is given, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bfc
