#pragma once

#include <iosfwd>

namespace poltel::app {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitBadArguments = 2;

/// Full CLI entry point; writes results to `out` (unless --out is given) and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace poltel::app
