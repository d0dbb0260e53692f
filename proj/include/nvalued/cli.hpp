#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nvalued::cli {

// Runs one CLI command. Exit codes: 0 = pass, 1 = property violation,
// 2 = usage error, 3 = resource cap exceeded. Output is deterministic for
// fixed arguments.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace nvalued::cli
