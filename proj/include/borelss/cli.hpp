#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace borelss {

enum ExitCode : int { kExitOk = 0, kExitInvalidInput = 1, kExitInconsistent = 2 };

/// Run the command line (arguments without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One row per (group, a parity, b parity) for type-(a,b) fibers of the given n.
nlohmann::json parity_table(int n);

}  // namespace borelss
