#include <iostream>

#include "cornerkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cornerkit::run(args, std::cout, std::cerr);
}
