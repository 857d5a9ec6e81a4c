#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qga::cli {

// Runs one command line (argv[0] is the program name). Data goes to `out`,
// diagnostics and error objects to `err`. Returns the process exit code:
// 0 on success, 1 for domain errors, 2 for usage errors.
int execute_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace qga::cli
