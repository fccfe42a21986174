#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wstrata {

// Full command-line entry point, reusable from tests.  `args` excludes the
// program name.  Returns the process exit code:
//   0  command ran and every checked assertion held
//   1  a mathematical assertion failed (a would-be counterexample)
//   2  usage error, unparseable input, I/O failure or resource cap
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wstrata
