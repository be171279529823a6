#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pulsent::cli {

enum ExitCode : int {
  kOk = 0,
  kParseFailure = 1,
  kUnknownPreset = 2,
  kIoError = 3,
  kUnphysicalState = 4,
  kValidationFailed = 5,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Data goes to `out` (or the --out file); diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pulsent::cli
