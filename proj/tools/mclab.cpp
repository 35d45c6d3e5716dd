#include <iostream>
#include <string>
#include <vector>

#include "mclab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mclab::cli::run(args, std::cout, std::cerr);
}
