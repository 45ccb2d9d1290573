#include <iostream>
#include <string>
#include <vector>

#include "f5gb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return f5gb::run_cli(args, std::cout, std::cerr);
}
