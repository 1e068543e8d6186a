#pragma once

#include <iosfwd>

namespace mqdr::cli {

/// Exit codes of `run`.
enum ExitCode : int { kOk = 0, kUsage = 2, kMath = 3 };

/// Parses argv, runs one subcommand, writes its report to `out` and any
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mqdr::cli
