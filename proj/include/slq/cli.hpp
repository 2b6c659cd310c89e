#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slq {

// Runs one CLI invocation. Exit codes: 0 success, 1 validation or
// precondition failure, 2 parse error, 64 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slq
