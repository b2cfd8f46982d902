#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace m3k {

// Runs the m3k command line: construct / analyze / verify.
// Returns 0 on success, 1 when verify found violations, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace m3k
