#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcg {

// Command dispatch; returns the process exit code.
//   0 success, 1 usage error, 2 precondition violation, 3 internal failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcg
