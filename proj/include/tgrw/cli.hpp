#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgrw::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int { kOk = 0, kInputError = 1, kCheckFailed = 2, kBudgetExceeded = 3 };

/// Runs one subcommand. `args` excludes the program name. The JSON run
/// report goes to `out`, human-readable diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgrw::cli
