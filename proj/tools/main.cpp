#include <iostream>
#include <string>
#include <vector>

#include "demorgan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return demorgan::cli::run(args, std::cin, std::cout, std::cerr);
}
