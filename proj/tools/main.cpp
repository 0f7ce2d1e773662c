#include <iostream>

#include "c2coh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return c2coh::run_cli(args, std::cout, std::cerr);
}
