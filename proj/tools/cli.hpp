#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace equilat::cli {

// Runs one subcommand. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`. Exit code 0 iff every requested check passed; 1 when a
// check failed; 2 for usage, file or precondition errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equilat::cli
