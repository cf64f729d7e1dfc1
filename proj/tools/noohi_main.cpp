#include <iostream>

#include "noohi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return noohi::run_cli(args, std::cout, std::cerr);
}
