#include <iostream>

#include "classic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return classic::cli::run(args, std::cin, std::cout, std::cerr);
}
