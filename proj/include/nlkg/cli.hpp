#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlkg::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

// Entry point of the `nlkg` tool. args[0] is the program name. A
// `--config FILE` of "name = value" lines supplies option defaults that
// explicit flags override; unknown names are a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlkg::cli
