#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mpp {

// Runs the CLI with the given arguments (excluding argv[0]).  Reports go to
// `out` as JSON, diagnostics to `err`.  Returns the process exit code:
// 0 success, 1 check failure, 2 usage or input error.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mpp
