#pragma once

#include <ostream>

namespace screening::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

/// Entry point of the `screening` tool. Normal output goes to `out`,
/// diagnostics and notices to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace screening::cli
