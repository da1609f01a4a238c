#include <iostream>

#include "zcolor_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zcolor::cli::run(args, std::cout);
}
