#include <iostream>
#include <string>
#include <vector>

#include "spg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return spg::run_cli(args, std::cout, std::cerr);
}
