#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pbij::cli
{

// Runs one command-line invocation. `args` excludes the program name.
// Returns the process exit status: 0 on success, 1 for invalid maps, 2 for
// violated theorem preconditions, 3 for I/O and parse errors.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace pbij::cli
