#pragma once

#include <iosfwd>

namespace divlat::cli {

enum ExitCode : int { kOk = 0, kCounterexample = 1, kUsage = 2, kFrameInsufficient = 3 };

/// Runs one command line. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace divlat::cli
