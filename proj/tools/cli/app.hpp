#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bssrw::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_input_error = 1,
  exit_no_obstruction = 2,
  exit_outside_cases = 3,
};

// Runs one command line (without the program name). Reports go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bssrw::cli
