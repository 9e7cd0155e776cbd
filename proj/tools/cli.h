#pragma once

#include <ostream>

namespace bqsos::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kInconclusive = 3,
};

/// Runs one command line. Normal output goes to `out`, diagnostics to
/// `err`.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace bqsos::cli
