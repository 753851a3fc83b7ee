#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropsl::cli {

enum ExitCode : int { ok = 0, input_error = 2, precondition_failed = 3 };

// Runs one command. args excludes the program name. Writes exactly one JSON
// document to out (the result, or {"error", "kind"} on failure).
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace tropsl::cli
