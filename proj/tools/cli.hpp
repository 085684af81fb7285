#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oja::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// Runs the oja command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oja::cli
