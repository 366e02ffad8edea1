#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spintherm::cli {

/// Parses the subcommand line (without the program name) and runs it.
/// Returns 0 on success, 2 for configuration errors, 3 for numerical
/// infeasibility. Data goes to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spintherm::cli
