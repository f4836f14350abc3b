#pragma once

#include <string>
#include <vector>

namespace posalg {

// Exit codes: 0 holds / witness found, 1 fails / none found,
// 2 inconclusive, 3 usage or parse error.
struct CliResult {
  int exit_code = 0;
  std::string output;  // report (JSON) or diagnostics
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace posalg
