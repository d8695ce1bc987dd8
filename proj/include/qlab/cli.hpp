#pragma once

#include <ostream>
#include <span>
#include <string>

namespace qlab {

// Runs one command line (without the program name) and returns the exit code:
// 0 success, 1 input error, 2 failed property check, 3 size limit.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qlab
