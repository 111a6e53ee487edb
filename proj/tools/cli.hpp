#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace motivic::cli {

enum ExitCode { kOk = 0, kSuiteFailure = 1, kParse = 2, kBudget = 3, kNoRationalForm = 4, kUnsupported = 5 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motivic::cli
