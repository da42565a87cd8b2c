#ifndef SPECISO_CLI_APP_HPP
#define SPECISO_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace speciso::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitIsomorphic = 0; // also: verified, batch completed
inline constexpr int kExitNotIsomorphic = 1;
inline constexpr int kExitCandidateFailed = 2;
inline constexpr int kExitUsage = 3;
inline constexpr int kExitOracleRefused = 4;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace speciso::cli

#endif
