#include <iostream>
#include <string>
#include <vector>

#include "nucover_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nucover::cli::run_cli(args, std::cout, std::cerr);
}
