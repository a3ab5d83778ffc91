#include <iostream>
#include <string>
#include <vector>

#include "fls/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fls::run_command(args, std::cout, std::cerr);
}
