#pragma once

#include <ostream>

namespace affweights::cli {

enum ExitCode : int {
    kSuccess = 0,
    kFalseVerdict = 1,
    kUsage = 2,
    kConsistency = 3,
};

/// Runs one command line; all output goes to out/err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace affweights::cli
