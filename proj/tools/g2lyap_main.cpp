#include <iostream>
#include <string>
#include <vector>

#include "g2lyap/driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return g2lyap::run_cli(args, std::cout, std::cerr);
}
