#include <cstdio>
#include <string>
#include <vector>

#include "qv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  qv::cli::RunResult res = qv::cli::run(args);
  std::fputs(res.output.c_str(), stdout);
  return res.exit_code;
}
