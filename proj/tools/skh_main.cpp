// skh - finite skew lattice and skew Heyting algebra workbench

#include <iostream>
#include <string>
#include <vector>

#include "skh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skh::run_command(args, std::cout, std::cerr);
}
