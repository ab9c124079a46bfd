#ifndef CUBESEG_TOOLS_CLI_HPP
#define CUBESEG_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cubeseg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kBudget = 3,
};

// Runs one invocation. args excludes the program name. The report goes to
// out only when the command succeeds; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubeseg::cli

#endif  // CUBESEG_TOOLS_CLI_HPP
