#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdfree::tools {

/// Routes a command line to the library. Exit codes: 0 success (or verdict
/// FREE), 1 forbidden verdict from `recognize`, 2 usage or input error,
/// 3 class-precondition failure.
int cli_dispatch(std::vector<std::string> args, std::istream& in, std::ostream& out,
                 std::ostream& err);

}  // namespace cdfree::tools
