#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tribraid {

enum ExitCode : int { kExitOk = 0, kExitRefused = 1, kExitUsage = 2 };

/// Runs the command-line tool. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tribraid
