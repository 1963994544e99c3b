#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace sgp::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;  // failed claim, flag, NotNearlyGorenstein, cap
inline constexpr int kExitUsage = 2;      // bad arguments or invalid input

/// Runs the sgp command line. args[0] is the program name. Records go to
/// `out`, diagnostics and help to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sgp::cli
