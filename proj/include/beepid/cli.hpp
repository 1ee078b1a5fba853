#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace beepid {

enum ExitCode : int { kExitOk = 0, kExitConfigError = 1, kExitRuntimeError = 2 };

/// Entry point of the `beepid` tool. `args` excludes the program name.
/// Results go to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace beepid
