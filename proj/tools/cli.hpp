#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parabose {

enum ExitCode : int { kExitOk = 0, kExitResidual = 1, kExitParse = 2, kExitDomain = 3 };

// Runs the command line `args` (without the program name). Reports and
// tables go to `out` unless --out names a file; summaries and errors go to
// `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace parabose
