#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypbeta {

// Exit statuses of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_fail = 1, exit_domain = 2, exit_numerical = 3, exit_usage = 64 };

// args excludes the program name. Reports go to out (or --output), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker count used when --jobs is absent: HYPBETA_JOBS, else the hardware thread count.
int default_jobs();

}  // namespace hypbeta
