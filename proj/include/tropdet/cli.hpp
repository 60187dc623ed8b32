#pragma once

#include <iosfwd>

namespace tropical::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Parses argv and runs one subcommand. Reports go to `out`, diagnostics to
// `err`. Matrix file arguments of "-" read from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace tropical::cli
