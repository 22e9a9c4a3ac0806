#include <iostream>
#include <string>
#include <vector>

#include "f4prolong/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return f4prolong::run_cli(args, std::cout, std::cerr);
}
