#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace z2r::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

// Runs one command line (without the program name). Code files are read from
// the path arguments, or from `in` when none is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace z2r::cli
