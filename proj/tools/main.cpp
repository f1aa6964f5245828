#include <iostream>

#include "vwreath/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vwreath::cli::run(args, std::cout, std::cerr);
}
