#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxcomm::cli {

enum ExitCode : int {
	kOk = 0,
	kInvalidInput = 2,
	kBudgetExceeded = 3,
	kInternalError = 4,
};

/// Runs the command line (args excludes the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace coxcomm::cli
