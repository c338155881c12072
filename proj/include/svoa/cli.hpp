#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace svoa {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 64;

/// Command-line entry point: writes results to out, diagnostics to err and
/// returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svoa
