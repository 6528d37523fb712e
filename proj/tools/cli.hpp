#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace azposet::cli {

/// Runs one command line (without the program name). Reports go to `out`
/// as JSON lines; usage problems go to `err`. Returns 0 when every check
/// passes, 1 when one fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace azposet::cli
