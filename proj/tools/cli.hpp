#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alpharad::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "6.00000000000" style: 12 significant digits, trailing zeros kept; exact zero prints "0".
std::string format_value(double x);

}  // namespace alpharad::cli
