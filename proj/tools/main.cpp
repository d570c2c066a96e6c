#include <iostream>
#include <string>
#include <vector>

#include "vbs/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return vbs::cli::run(args, std::cout, std::cerr);
}
