#include <cstdio>
#include <string>
#include <vector>

#include "posalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  posalg::CliResult r = posalg::run_cli(args);
  if (!r.output.empty()) {
    if (r.exit_code == 3)
      std::fputs(r.output.c_str(), stderr);
    else
      std::fputs(r.output.c_str(), stdout);
  }
  return r.exit_code;
}
