#include <iostream>

#include "joinlat/cli.hpp"

int main(int argc, char **argv) {
  return joinlat::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
