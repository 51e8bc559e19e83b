#include <iostream>
#include <string>
#include <vector>

#include "quotshrink/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quotshrink::run_cli(args, std::cout, std::cerr);
}
