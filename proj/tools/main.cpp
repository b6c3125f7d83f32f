#include <iostream>
#include <string>
#include <vector>

#include "thermnet/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return thermnet::cli::run(args, std::cout, std::cerr);
}
