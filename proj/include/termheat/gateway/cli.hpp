#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace termheat::gateway {

/// Entry point of the `termheat` tool. `args` excludes the program name.
/// Exit codes: 0 success, 2 usage or input error, 1 unexpected failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace termheat::gateway
