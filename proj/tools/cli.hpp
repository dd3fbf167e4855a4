#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypersym::cli {

/// Runs the command line; returns the process exit code
/// (0 success, 1 computation or verification failure, 2 usage error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with args excluding the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypersym::cli
