#ifndef CONVCODE_CLI_HPP
#define CONVCODE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace convcode {

/// Exit statuses of run_command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

/**
 * Run one CLI invocation. args excludes the program name. Reports go to out
 * (or to --output), diagnostics to err.
 */
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace convcode

#endif
