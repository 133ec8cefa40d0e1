#include <iostream>

#include "possmc_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return possmc::cli::run(args, std::cout, std::cerr);
}
