#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace negaring {

// Dispatches one command line (without argv[0]). Exit codes: 0 success,
// 2 usage error, 3 budget exceeded, 4 internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace negaring
