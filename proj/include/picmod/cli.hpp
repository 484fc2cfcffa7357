#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace picmod::cli {

// Runs the CLI on the given arguments (program name excluded).
// Exit codes: 0 success, 1 domain error (error name on stderr),
// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace picmod::cli
