#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mf {

// Exit codes: 0 success, 1 check/validation failure, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mf
