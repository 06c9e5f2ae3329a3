#pragma once

#include <ostream>
#include <span>
#include <string>

namespace frechet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one frechet-lab invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on a theorem-regime failure or invalid metric,
/// 2 on a usage error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace frechet::cli
