#include <iostream>

#include "domchrom_cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv, argv + argc);
  return domchrom::cli::run(args, std::cin, std::cout, std::cerr);
}
