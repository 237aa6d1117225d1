#include <iostream>

#include "rbg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rbg::cli_dispatch(args, std::cout, std::cerr);
}
