#pragma once

#include <iosfwd>

namespace antimagic {

enum ExitCode : int {
  kExitOk = 0,
  kExitHypothesis = 1,
  kExitVerification = 2,
  kExitInput = 3,
  kExitDefect = 4,
};

/// Runs the command line against the given streams and returns the exit
/// code. A file argument of "-" reads from `in`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace antimagic
