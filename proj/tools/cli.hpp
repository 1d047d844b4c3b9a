#pragma once

// Command dispatch for the chardeg executable, kept in a library so tests can
// drive it without spawning processes.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace chardeg::cli {

enum class Status { pass, fail, inconclusive, error };

std::string to_string(Status s);

/// 0 pass, 1 fail, 2 error, 3 inconclusive.
int exit_code_for(Status s);

struct CommandResult {
  Status status = Status::error;
  nlohmann::json payload;
  int exit_code = 2;
  // Rendered stdout. JSON by default, one record per line under --jsonl,
  // raw text for --csv and --help.
  std::string output;
};

/// argv[0] is the program name. Usage and error text go to `diag`.
CommandResult run(const std::vector<std::string>& argv, std::ostream& diag);

}  // namespace chardeg::cli
