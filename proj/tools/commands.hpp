#pragma once

#include <iosfwd>

namespace bintab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitDomain = 4;

/// Entry point of the `bintab` tool, writing to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bintab::cli
