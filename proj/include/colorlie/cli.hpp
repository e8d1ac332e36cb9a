#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace colorlie {

/// Exit codes of the command-line tool.
enum ExitCode { ExitPass = 0, ExitFail = 1, ExitUsage = 2 };

/// Runs the `colorlie` command line; args exclude the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace colorlie
