#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cutplan::cli {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitInputError = 2,
  kExitBudgetError = 3,
  kExitInternalError = 4,
};

/// Entry point of the `cutplan` executable. `args` excludes the program
/// name. Reports go to `out`, diagnostics and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cutplan::cli
