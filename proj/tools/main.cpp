#include <iostream>
#include <string>
#include <vector>

#include "qrcomp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qrcomp::run_cli(args, std::cin, std::cout, std::cerr);
}
