#include <iostream>
#include <string>
#include <vector>

#include "edgeideal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return edgeideal::cli::run(std::move(args), std::cout, std::cerr);
}
