#ifndef AMAT_CLI_HPP
#define AMAT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace amat {

enum ExitCode : int { exit_ok = 0, exit_parse = 1, exit_domain = 2, exit_verification = 3 };

/// Runs one command line (without the program name) and returns the exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amat

#endif  // AMAT_CLI_HPP
