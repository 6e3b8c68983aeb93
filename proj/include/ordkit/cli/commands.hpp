#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ordkit::cli {

/// Runs one command line (without the program name). Exit codes: 0 done
/// with an affirmative verdict, 1 property fails or infeasible, 2 input,
/// parse or cap error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordkit::cli
