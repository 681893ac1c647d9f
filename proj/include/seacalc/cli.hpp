#pragma once

#include <ostream>

namespace seacalc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `seacalc` command. Reads SEACALC_CONFIG for defaults.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seacalc
