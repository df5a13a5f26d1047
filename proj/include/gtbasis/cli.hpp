#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gtb {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitInvalidInput = 2,
    kExitConstructionFailed = 3,
    kExitOutputFailed = 4,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtb
