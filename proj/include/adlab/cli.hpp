#pragma once

#include <string>
#include <vector>

namespace adlab::cli {

struct CommandResult {
  int exit_code = 0;  // 0 success, 1 domain error, 2 usage error
  std::string out;    // JSON payload
  std::string err;    // diagnostics
};

/// Runs one command line (without the program name).
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace adlab::cli
