#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace effrand::cli {

// Exit statuses.
inline constexpr int kPass = 0;
inline constexpr int kUsage = 2;
inline constexpr int kFail = 3;

/// Runs one command line. args excludes the program name. Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace effrand::cli
