#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ktsp::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kPreconditionError = 2,
  kResourceError = 3,
  kVerdictFailed = 4,
  kInternalError = 5,
};

/// Runs one command line (without the program name). The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ktsp::cli
