#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgeideal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceLimit = 3;
inline constexpr int kExitInternal = 4;

/// Runs one invocation. `args` excludes the program name. Output goes to
/// `out`, diagnostics and usage to `err`.
///
/// Exit codes: 0 success, 1 verification failed, 2 usage or input error,
/// 3 resource limit reached, 4 internal error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace edgeideal::cli
