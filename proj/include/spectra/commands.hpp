#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectra {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIncomplete = 2,
  kExitCheckFailed = 3,
};

/// Runs the command line `args` (without the program name) writing results to
/// `out` and diagnostics to `err`.  Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default working precision: SPECTRA_PRECISION_BITS when set, else 256.
long default_precision_bits();

}  // namespace spectra
