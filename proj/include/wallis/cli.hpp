#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wallis {

/// Exit codes of the command-line frontend.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTolerance = 3;

/// Runs the frontend on args (args[0] is the program name). Results go to out
/// as a single JSON document, or as indented key: value lines with --pretty.
/// Diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wallis
