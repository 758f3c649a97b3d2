#include <iostream>

#include "graphcake/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return graphcake::dispatch(args, std::cin, std::cout, std::cerr);
}
