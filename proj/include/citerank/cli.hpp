#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace citerank::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDataError = 2,
    kNotConverged = 3,
};

/// Runs one subcommand. `args` excludes the program name. The human-readable report goes
/// to `out`; `--csv FILE` and `--json FILE` additionally write machine-readable copies.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace citerank::cli
