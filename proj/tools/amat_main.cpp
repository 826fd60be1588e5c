#include <iostream>

#include "amat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return amat::run_command(args, std::cout, std::cerr);
}
