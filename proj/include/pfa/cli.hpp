#pragma once

#include <iosfwd>

namespace pfa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitConvergence = 2;
inline constexpr int kExitFit = 3;

/// Entry point of the `pfa` tool. Subcommands:
///   energy  sweep a geometry over a gap grid, one row per point
///   fit     sweep (or read a CSV written by `energy`) and fit a ratio model
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pfa::cli
