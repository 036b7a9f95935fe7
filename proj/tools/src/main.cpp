#include <iostream>
#include <string>
#include <vector>

#include "photonpath_cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return photonpath::cli::main_entry(args, std::cout, std::cerr);
}
