#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sloane::cli {

/// Exit codes: 0 when every check passes, 1 when a check reports
/// violations, 2 on usage, parse or input errors.
enum ExitCode : int { kPass = 0, kViolations = 1, kUsage = 2 };

/// Runs one command line; args[0] is the program name. Reports go to
/// `out`, diagnostics and summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sloane::cli
