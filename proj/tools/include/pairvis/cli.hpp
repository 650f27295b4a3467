#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pairvis {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // internal errors
  kExitInvalidInput = 2,
  kExitInfeasiblePoint = 3,
};

// Runs one command line; args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pairvis
