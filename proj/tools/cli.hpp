#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ztile::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kInconclusive = 3,
  kInternalFault = 4,
};

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ztile::cli
