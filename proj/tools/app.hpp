#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ras::cli {

/// Runs the `ras` command line. `args` excludes the program name.
/// Returns 0 on success, 2 on argument errors, 1 on numeric or runtime failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ras::cli
