#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lifekit {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 verification or search failure, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lifekit
