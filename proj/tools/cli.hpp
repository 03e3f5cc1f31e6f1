#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treecount::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kBadConfig = 2,
  kCounterexample = 3,
  kIoError = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treecount::cli
