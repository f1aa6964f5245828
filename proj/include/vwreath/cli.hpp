#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vwreath::cli {

enum ExitCode { ok = 0, negative = 1, input_error = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vwreath::cli
