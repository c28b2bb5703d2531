#include <iostream>
#include <string>
#include <vector>

#include "oddjacobi/driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return oddjacobi::run_command(args, std::cout, std::cerr);
}
