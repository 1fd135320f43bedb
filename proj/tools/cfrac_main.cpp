#include <iostream>
#include <string>
#include <vector>

#include "cfrac/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cfrac::cli::run(args, std::cout, std::cerr);
}
