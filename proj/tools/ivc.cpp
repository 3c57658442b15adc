#include <iostream>

#include "ivc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ivc::cli::run(args, std::cout, std::cerr);
}
