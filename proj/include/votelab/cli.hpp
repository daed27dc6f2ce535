#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace votelab {

// Command-line driver. args excludes the program name. Returns the process
// exit status: 0 success/certified, 1 counterexample or mismatch found,
// 2 usage or input error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace votelab
