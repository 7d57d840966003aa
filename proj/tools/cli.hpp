#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylfac::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,          // bad flags, parse errors, zero input, missing files
    kInhomogeneous = 2,
    kVerification = 3,   // a factorization failed to re-multiply (a bug)
    kBenchMismatch = 4,
};

/// Runs the command line tool with output going to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylfac::cli
