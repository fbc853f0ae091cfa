#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isolation {

/// Exit codes of the command-line front end.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitAborted = 3;

/// Runs `isolate <subcommand> ...`; args exclude the program name. `in`
/// serves "--input -".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace isolation
