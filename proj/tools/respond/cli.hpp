#pragma once

#include <ostream>

namespace respond::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;      ///< bad command line or config; nothing written
inline constexpr int kExitNumerical = 3;  ///< partial manifest written

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace respond::cli
