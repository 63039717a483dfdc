#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qfq::cli {

/// Exit codes.
enum Status : int { ok = 0, failed_check = 1, usage_error = 2, input_error = 3, precondition_error = 4, budget_error = 5 };

/// Runs one command line (args excludes the program name). Command output
/// goes to `out`; failures write a JSON error record to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfq::cli
