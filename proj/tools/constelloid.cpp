#include <iostream>
#include <string>
#include <vector>

#include "constelloid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return constelloid::cli::run_command(args, std::cout, std::cerr);
}
