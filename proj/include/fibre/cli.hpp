#ifndef FIBRE_CLI_HPP
#define FIBRE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fibre {

/// Process exit codes of the fibrecount tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitOracleMismatch = 1,
  kExitParse = 2,
  kExitDomain = 3,
  kExitCap = 4,
};

/// Runs fibrecount with the given arguments (program name excluded),
/// writing reports to out and diagnostics to err. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibre

#endif  // FIBRE_CLI_HPP
