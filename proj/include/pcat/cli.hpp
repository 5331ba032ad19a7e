#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcat {

/// Runs the command line `args` (without the program name). Exit codes:
/// 0 ok / IN, 1 OUT / violations, 2 usage or input error, 3 resource cap.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace pcat
