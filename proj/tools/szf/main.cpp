#include <iostream>

#include "szf/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return szf::cli_main({argv + 1, argv + argc}, std::cout, std::cerr);
}
