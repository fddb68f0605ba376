#include <iostream>
#include <string>
#include <vector>

#include "esd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return esd::cli::run(args, std::cout, std::cerr, std::cin);
}
