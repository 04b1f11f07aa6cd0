#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eulink::cli {

// Runs one command line (without the program name) and writes the report to
// out. Exit codes: 0 pass, 1 obstruction certificate produced, 2 input or
// validation error, 3 violated unconditional identity.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace eulink::cli
