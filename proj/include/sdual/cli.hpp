#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sdual {

enum ExitCode { kExitPass = 0, kExitInternal = 1, kExitInvalidInput = 2, kExitVerificationFailed = 3 };

// Runs the command line `args` (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdual
