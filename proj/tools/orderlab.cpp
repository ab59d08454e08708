#include <iostream>
#include <string>
#include <vector>

#include "orderlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return orderlab::dispatch(args, std::cout, std::cerr);
}
