#pragma once

#include <ostream>
#include <span>
#include <string>

namespace catode {

/// Exit codes: 0 when every requested check passes, 1 on a verification
/// failure, 2 on a usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `catalan-ode` tool. `args` excludes the program name.
/// The CATALAN_ODE_THREADS environment variable sets the worker count unless
/// --threads is given.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace catode
