#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace switchmix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
/// Non-graphical input, invalid encoding or a frozen chain.
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitCap = 3;

/// Runs one command line (without the program name). Results go to `out`
/// or to --out; diagnostics, and the run manifest when neither --out nor
/// --manifest is given, go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

std::string sha256_hex(std::string_view bytes);

}  // namespace switchmix::cli
