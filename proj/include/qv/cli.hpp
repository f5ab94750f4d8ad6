#pragma once

#include <string>
#include <vector>

namespace qv::cli {

struct RunResult {
  int exit_code;       // 0 success, 1 verification failure, 2 usage error
  std::string output;  // deterministic for a fixed argument vector
};

/// Runs one CLI invocation (argv without the program name).
RunResult run(const std::vector<std::string>& args);

}  // namespace qv::cli
