#include <iostream>
#include <string>
#include <vector>

#include "cornersearch/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return cornersearch::cli::main_entry(args, std::cout, std::cerr);
}
