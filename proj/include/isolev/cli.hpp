#ifndef ISOLEV_CLI_HPP
#define ISOLEV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace isolev {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitClaimFailed = 1,
    kExitInputError = 2,
    kExitCapability = 3,
};

/// Runs the tool on args (without the program name), writing to out and err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isolev

#endif  // ISOLEV_CLI_HPP
