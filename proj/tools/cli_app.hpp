#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectre::cli {

/// Exit codes: 0 pass or info, 1 check failure, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectre::cli
