#pragma once

#include "qwz/identities.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace qwz::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kPass = 0,
    kFail = 1,
    kUsage = 2,
    kInconclusive = 3,
};

/// 1 if any check failed, else 2 if any hit a domain error or pole, else 3
/// if any was inconclusive, else 0.
int aggregate_exit_code(const std::vector<identities::Status>& statuses);

/// Parses args (args[0] is the program name), dispatches the subcommand and
/// writes reports to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwz::cli
