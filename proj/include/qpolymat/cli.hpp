#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpolymat {

/// Runs one CLI invocation (args exclude the program name). Exit status:
/// 0 success / all checks verified, 1 verification failure, 2 usage, parse or
/// resource-cap error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpolymat
