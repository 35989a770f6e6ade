#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gvcp::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitAnomaly = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gvcp::cli
