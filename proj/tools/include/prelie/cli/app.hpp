#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prelie::cli {

// Exit codes: 0 pass/success, 1 checked and failed (or a mathematical
// precondition does not hold), 2 input error, 3 budget exceeded.
enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2, kBudget = 3 };

// Maps an error kind (Error::kind()) to its exit code.
int exit_code_for(const std::string& kind);

// Runs one command line (without the program name). The JSON document goes
// to out, human-readable summaries and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prelie::cli
