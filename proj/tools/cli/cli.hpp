#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace divorient::cli {

/// Runs the `divorient` command line. `args` excludes the program name.
/// Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace divorient::cli
