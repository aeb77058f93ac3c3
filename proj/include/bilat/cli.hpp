#ifndef BILAT_CLI_HPP
#define BILAT_CLI_HPP

#include <iosfwd>

namespace bilat {

// Exit codes shared by all subcommands besides their own contracts.
inline constexpr int kExitUsage = 64;

// Entry point of the `bilat` tool; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bilat

#endif  // BILAT_CLI_HPP
