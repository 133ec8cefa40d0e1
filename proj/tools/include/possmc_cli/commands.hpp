#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace possmc::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationError = 1,
  kInputError = 2,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// as JSON, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace possmc::cli
