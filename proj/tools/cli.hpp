#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycomplete::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kYes = 0, kNo = 1, kInputError = 2 };

/**
 * Run the command line `args` (args[0] is the program name).  "-" as a file
 * argument reads `in`.  Returns the process exit code.
 */
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace polycomplete::cli
