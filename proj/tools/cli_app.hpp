#pragma once

#include <iosfwd>

namespace ndi::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNumericalError = 2,
};

/// Runs the `ndi` command line. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ndi::cli
