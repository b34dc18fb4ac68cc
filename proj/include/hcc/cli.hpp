#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcc::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and usage text to `err`. Returns 0 for YES or solved, 1 for
/// NO or infeasible, 2 for usage, input or internal errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcc::cli
