#include <iostream>

#include "mkp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mkp::run_cli(args, std::cout, std::cerr);
}
