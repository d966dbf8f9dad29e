#ifndef VECALLOC_TOOLS_COMMANDS_HPP
#define VECALLOC_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace vecalloc::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,
  kInfeasible = 2,
  kSizeGuard = 3,
};

/// "100,200,300" or "start:end:step" (inclusive end). Throws ConfigError on
/// malformed or non-positive values.
std::vector<double> parse_traffic(std::string_view text);

/// Comma-separated list of doubles; an empty string yields an empty list.
std::vector<double> parse_list(std::string_view text);

/// Full command-line entry point. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vecalloc::cli

#endif  // VECALLOC_TOOLS_COMMANDS_HPP
