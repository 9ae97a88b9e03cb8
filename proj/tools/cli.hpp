#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shsh::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalid = 2,  // validation, structural or domain failure
    kChart = 3,    // chart or positivity failure
    kFormat = 4,   // unreadable files, malformed input, bad usage
};

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shsh::cli
