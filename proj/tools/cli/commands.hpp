#pragma once

#include <ostream>

#include "cli/run_config.hpp"

namespace liouq::cli {

enum ExitCode : int {
  kExitOk = 0,            // verified, or a scan came back empty as expected
  kExitError = 1,         // usage, I/O or format error
  kExitViolation = 2,     // a scan expected to be empty found a solution
  kExitNotFound = 3,      // a constructive search exhausted its range
  kExitPrecondition = 4,  // e.g. lambda_Q(c) = +1 for the cnk check
};

// Parses argv and runs the selected subcommand. Reports go to `out`
// unless --out names a file; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Executes an already-parsed configuration.
int run_config(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace liouq::cli
