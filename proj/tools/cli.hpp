#pragma once

#include <string>
#include <vector>

namespace entlab::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidConfig = 1,
  kBudgetExceeded = 2,
  kSuiteFailure = 3,
  kInternalError = 4,
};

/// Runs one command line (args[0] is the program name) and returns the exit
/// code. Summaries go to stdout, diagnostics to stderr.
int run(const std::vector<std::string>& args);

}  // namespace entlab::cli
