#pragma once

#include <iosfwd>

namespace gpx::cli {

// Exit codes
constexpr int kOk = 0;
constexpr int kFailed = 1;    // a verification suite or self-test failed
constexpr int kUsage = 2;     // bad flags, unknown species/complex, bad input files
constexpr int kResource = 3;  // enumeration hit GRAPHOPLEX_MAX_CELLS

int run(int argc, char** argv);

/// Runs the built-in assertions, printing one line per check.
int selftest(std::ostream& out);

} // namespace gpx::cli
