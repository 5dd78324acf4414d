#include <iostream>
#include <string>
#include <vector>

#include "homshift/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homshift::cli::run(args, std::cout, std::cerr);
}
