#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quotshrink {

// Runs the command-line interface; args excludes the program name. Returns
// the process exit code: 0 on success, 1 on precondition or input failure,
// 2 on an internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace quotshrink
