#pragma once

#include <iosfwd>

namespace deli::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;  ///< IO or runtime failure
inline constexpr int kExitUsage = 2;    ///< invalid flags or parameter combination

/// Entry point of the `deli` tool: gen, cluster, lift, plot and bench.
/// Normal output goes to `out`, notices and errors to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace deli::cli
