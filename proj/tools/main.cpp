#include <iostream>
#include <string>
#include <vector>

#include "loopbraid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return loopbraid::cli::run(args, std::cout, std::cerr);
}
