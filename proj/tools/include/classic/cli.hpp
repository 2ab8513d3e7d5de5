#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace classic::cli {

enum ExitCode : int {
  kTrue = 0,
  kFalse = 1,
  kUsage = 2,
  kSemanticMode = 3,
  kLcsNotExist = 4,
};

/// Runs one command. `args` excludes the program name. Input "-" reads
/// `in`; results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace classic::cli
