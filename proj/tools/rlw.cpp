#include <iostream>

#include "rlw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rlw::run(args, std::cout, std::cerr);
}
